#ifndef BALAGHA_TAXONOMY_HPP
#define BALAGHA_TAXONOMY_HPP

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "balagha/device_code.hpp"

namespace balagha {

// One catalogued literary device.
struct Device {
  DeviceCode code;
  std::string name_en;
  std::string name_ar;
  Domain domain;
  std::optional<Part> part;
  std::set<int> allowed_marks;
  // Per-device scoring nuance shown to assessors; the engine does not
  // interpret it.
  std::optional<std::string> multiplicity_note;
  std::string definition_summary;
  std::string deep_link_slug;

  friend bool operator==(const Device&, const Device&) = default;
};

struct DeviceFilter {
  std::optional<Domain> domain;
  std::optional<Part> part;
};

// The immutable device catalogue, in proforma order.
class Taxonomy {
 public:
  // Validates every catalogue invariant; throws InternalDataCorrupt.
  Taxonomy(std::vector<Device> devices, std::string version);

  std::span<const Device> devices() const { return devices_; }
  const std::string& version() const { return version_; }

  const Device* find(const DeviceCode& code) const;
  const Device* find(std::string_view code_text) const;
  const Device* find_by_slug(std::string_view slug) const;

  // Throws UnknownDevice.
  const Device& get(const DeviceCode& code) const;
  const Device& get(std::string_view code_text) const;

  // Throws InvalidFilter when a part is requested outside domain C.
  std::vector<const Device*> list(const DeviceFilter& filter = {}) const;

  friend bool operator==(const Taxonomy&, const Taxonomy&) = default;

 private:
  std::vector<Device> devices_;
  std::string version_;
};

// The embedded catalogue. Built and validated once; every call returns the
// same instance.
const Taxonomy& load_taxonomy();

std::string format_marks(const std::set<int>& marks);  // "{0,1,2}"

}  // namespace balagha

#endif  // BALAGHA_TAXONOMY_HPP
