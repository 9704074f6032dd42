#include "balagha/taxonomy.hpp"

#include <algorithm>
#include <unordered_set>

#include "balagha/errors.hpp"

namespace balagha {

namespace detail {
// Defined in taxonomy_data.cpp.
std::vector<Device> embedded_devices();
extern const char kTaxonomyVersion[];
}  // namespace detail

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw InternalDataCorrupt("device catalogue: " + what);
}

void validate(const std::vector<Device>& devices) {
  check(devices.size() == 84,
        "expected 84 devices, found " + std::to_string(devices.size()));
  int per_domain[3] = {0, 0, 0};
  int per_part[7] = {0, 0, 0, 0, 0, 0, 0};
  std::unordered_set<std::string> slugs;
  int deduction_devices = 0;
  const std::set<int> standard{0, 1, 2};
  const std::set<int> deduction{0, -1};
  for (std::size_t i = 0; i < devices.size(); ++i) {
    const Device& d = devices[i];
    const std::string code = d.code.str();
    check(d.domain == d.code.domain() && d.part == d.code.part(),
          code + " placement disagrees with its code");
    check(i == 0 || devices[i - 1].code < d.code,
          code + " out of proforma order or duplicated");
    check(!d.name_en.empty() && !d.name_ar.empty(), code + " missing a name");
    check(!d.definition_summary.empty(), code + " missing definition");
    check(slugs.insert(d.deep_link_slug).second,
          code + " duplicate slug " + d.deep_link_slug);
    ++per_domain[static_cast<int>(d.domain)];
    if (d.part) ++per_part[static_cast<int>(*d.part)];
    if (d.allowed_marks == deduction) {
      ++deduction_devices;
      check(code == "CG-1", code + " must not be a deduction device");
    } else {
      check(d.allowed_marks == standard, code + " has a non-standard scale");
    }
  }
  check(per_domain[0] == 14 && per_domain[1] == 6 && per_domain[2] == 64,
        "domain cardinalities");
  for (int p = 0; p < 7; ++p) {
    check(per_part[p] == part_size(static_cast<Part>(p)),
          std::string("part ") + part_letter(static_cast<Part>(p)) +
              " cardinality");
  }
  check(deduction_devices == 1, "exactly one deduction device expected");
}

}  // namespace

Taxonomy::Taxonomy(std::vector<Device> devices, std::string version)
    : devices_(std::move(devices)), version_(std::move(version)) {
  validate(devices_);
}

const Device* Taxonomy::find(const DeviceCode& code) const {
  const auto it = std::lower_bound(
      devices_.begin(), devices_.end(), code,
      [](const Device& d, const DeviceCode& c) { return d.code < c; });
  if (it == devices_.end() || it->code != code) return nullptr;
  return &*it;
}

const Device* Taxonomy::find(std::string_view code_text) const {
  const auto code = DeviceCode::parse(code_text);
  return code ? find(*code) : nullptr;
}

const Device* Taxonomy::find_by_slug(std::string_view slug) const {
  for (const Device& d : devices_) {
    if (d.deep_link_slug == slug) return &d;
  }
  return nullptr;
}

const Device& Taxonomy::get(const DeviceCode& code) const {
  if (const Device* d = find(code)) return *d;
  throw UnknownDevice(code.str());
}

const Device& Taxonomy::get(std::string_view code_text) const {
  if (const Device* d = find(code_text)) return *d;
  throw UnknownDevice(std::string(code_text));
}

std::vector<const Device*> Taxonomy::list(const DeviceFilter& filter) const {
  if (filter.part && filter.domain != Domain::kC) {
    throw InvalidFilter("a part filter requires domain C");
  }
  std::vector<const Device*> out;
  for (const Device& d : devices_) {
    if (filter.domain && d.domain != *filter.domain) continue;
    if (filter.part && d.part != filter.part) continue;
    out.push_back(&d);
  }
  return out;
}

const Taxonomy& load_taxonomy() {
  static const Taxonomy instance(detail::embedded_devices(),
                                 detail::kTaxonomyVersion);
  return instance;
}

std::string format_marks(const std::set<int>& marks) {
  std::string out = "{";
  bool first = true;
  for (int m : marks) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

}  // namespace balagha
