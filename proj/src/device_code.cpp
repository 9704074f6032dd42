#include "balagha/device_code.hpp"

#include <charconv>
#include <stdexcept>

namespace balagha {

char domain_letter(Domain d) { return static_cast<char>('A' + static_cast<int>(d)); }

char part_letter(Part p) { return static_cast<char>('A' + static_cast<int>(p)); }

std::optional<Domain> parse_domain(std::string_view s) {
  if (s.size() != 1 || s[0] < 'A' || s[0] > 'C') return std::nullopt;
  return static_cast<Domain>(s[0] - 'A');
}

std::optional<Part> parse_part(std::string_view s) {
  if (s.size() != 1 || s[0] < 'A' || s[0] > 'G') return std::nullopt;
  return static_cast<Part>(s[0] - 'A');
}

int domain_size(Domain d) {
  switch (d) {
    case Domain::kA:
      return 14;
    case Domain::kB:
      return 6;
    case Domain::kC:
      return 64;
  }
  return 0;
}

int part_size(Part p) {
  static constexpr int kSizes[] = {14, 5, 7, 7, 22, 8, 1};
  return kSizes[static_cast<int>(p)];
}

DeviceCode::DeviceCode(Domain domain, std::optional<Part> part, int index)
    : domain_(domain), part_(part), index_(index) {
  if ((domain == Domain::kC) != part.has_value()) {
    throw std::invalid_argument("part is required for domain C only");
  }
  const int limit = part ? part_size(*part) : domain_size(domain);
  if (index < 1 || index > limit) {
    throw std::invalid_argument("device index out of range");
  }
}

std::optional<DeviceCode> DeviceCode::parse(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos || dash == 0 || dash > 2) {
    return std::nullopt;
  }
  const auto domain = parse_domain(text.substr(0, 1));
  if (!domain) return std::nullopt;
  std::optional<Part> part;
  if (dash == 2) {
    part = parse_part(text.substr(1, 1));
    if (!part) return std::nullopt;
  }
  if ((*domain == Domain::kC) != part.has_value()) return std::nullopt;

  const auto digits = text.substr(dash + 1);
  if (digits.empty() || digits.size() > 2 || digits[0] == '0') {
    return std::nullopt;
  }
  int index = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  const int limit = part ? part_size(*part) : domain_size(*domain);
  if (index < 1 || index > limit) return std::nullopt;
  return DeviceCode(*domain, part, index);
}

std::string DeviceCode::str() const {
  std::string out(1, domain_letter(domain_));
  if (part_) out.push_back(part_letter(*part_));
  out.push_back('-');
  out += std::to_string(index_);
  return out;
}

}  // namespace balagha
