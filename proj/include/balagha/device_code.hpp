#ifndef BALAGHA_DEVICE_CODE_HPP
#define BALAGHA_DEVICE_CODE_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace balagha {

// The three classical sub-domains: word order and sentence structure (A),
// figures of speech (B) and embellishments (C).
enum class Domain { kA, kB, kC };

// Location-based groupings of domain C, from word choice (A) to whole-text
// devices (F) and the deduction group (G).
enum class Part { kA, kB, kC, kD, kE, kF, kG };

char domain_letter(Domain d);
char part_letter(Part p);
std::optional<Domain> parse_domain(std::string_view s);
std::optional<Part> parse_part(std::string_view s);

// Number of devices catalogued for a domain (A, B) or a domain C part.
int domain_size(Domain d);
int part_size(Part p);

// Identifies one literary device, rendered canonically as "A-3", "B-6",
// "CA-12" or "CG-1". Ordering is proforma order.
class DeviceCode {
 public:
  // Throws std::invalid_argument when the combination is out of range.
  DeviceCode(Domain domain, std::optional<Part> part, int index);

  // Accepts canonical strings only; nullopt for anything else, including
  // indices outside the catalogued range.
  static std::optional<DeviceCode> parse(std::string_view text);

  Domain domain() const { return domain_; }
  const std::optional<Part>& part() const { return part_; }
  int index() const { return index_; }

  std::string str() const;

  friend auto operator<=>(const DeviceCode&, const DeviceCode&) = default;
  friend bool operator==(const DeviceCode&, const DeviceCode&) = default;

 private:
  Domain domain_;
  std::optional<Part> part_;
  int index_;
};

}  // namespace balagha

#endif  // BALAGHA_DEVICE_CODE_HPP
