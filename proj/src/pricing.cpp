#include "costbench/pricing.hpp"

#include <array>
#include <functional>

#include "costbench/errors.hpp"

namespace costbench {

namespace {

struct PriceField {
  const char* name;
  Dec PricingCatalog::* member;
};

constexpr std::array<PriceField, 10> kPriceFields = {{
    {"per_invocation", &PricingCatalog::per_invocation},
    {"per_gb_second", &PricingCatalog::per_gb_second},
    {"per_db_read", &PricingCatalog::per_db_read},
    {"per_db_write", &PricingCatalog::per_db_write},
    {"per_message", &PricingCatalog::per_message},
    {"per_vm_hour", &PricingCatalog::per_vm_hour},
    {"cluster_fee_per_hour", &PricingCatalog::cluster_fee_per_hour},
    {"lb_fee_per_hour", &PricingCatalog::lb_fee_per_hour},
    {"per_container_vcpu_hour", &PricingCatalog::per_container_vcpu_hour},
    {"per_container_gb_hour", &PricingCatalog::per_container_gb_hour},
}};

constexpr std::array<PriceField, 2> kMinimumFields = {{
    {"container_min_vcpu", &PricingCatalog::container_min_vcpu},
    {"container_min_gb", &PricingCatalog::container_min_gb},
}};

}  // namespace

PricingCatalog catalog_from_kv(const KvFile& kv) {
  std::set<std::string> allowed = {"label", "source"};
  for (const auto& f : kPriceFields) allowed.insert(f.name);
  for (const auto& f : kMinimumFields) allowed.insert(f.name);
  kv.restrict_keys(allowed);

  PricingCatalog cat;
  cat.label = kv.require("label");
  if (cat.label.empty()) throw ValidationError("label", "must be non-empty");
  cat.source = kv.get_string("source", "");
  for (const auto& f : kPriceFields) {
    Dec value = kv.get_dec(f.name, Dec());
    if (value.is_negative()) {
      throw ValidationError(f.name, "price must be >= 0 in " + kv.origin());
    }
    cat.*(f.member) = value;
  }
  for (const auto& f : kMinimumFields) {
    Dec value = kv.get_dec(f.name, cat.*(f.member));
    if (value.is_negative()) {
      throw ValidationError(f.name, "must be >= 0 in " + kv.origin());
    }
    cat.*(f.member) = value;
  }
  return cat;
}

PricingCatalog load_catalog(const std::filesystem::path& path) {
  return catalog_from_kv(KvFile::load(path));
}

std::string serialize_catalog(const PricingCatalog& catalog) {
  std::string out;
  out += "label = " + catalog.label + "\n";
  if (!catalog.source.empty()) out += "source = " + catalog.source + "\n";
  for (const auto& f : kPriceFields) {
    out += std::string(f.name) + " = " + (catalog.*(f.member)).str() + "\n";
  }
  for (const auto& f : kMinimumFields) {
    out += std::string(f.name) + " = " + (catalog.*(f.member)).str() + "\n";
  }
  return out;
}

void save_catalog(const PricingCatalog& catalog, const std::filesystem::path& path) {
  write_text_file(path, serialize_catalog(catalog));
}

std::vector<CatalogDiffEntry> catalog_diff(const PricingCatalog& a,
                                           const PricingCatalog& b) {
  std::vector<CatalogDiffEntry> diff;
  if (a.label != b.label) diff.push_back({"label", a.label, b.label});
  for (const auto& f : kPriceFields) {
    if (a.*(f.member) != b.*(f.member)) {
      diff.push_back({f.name, (a.*(f.member)).str(), (b.*(f.member)).str()});
    }
  }
  for (const auto& f : kMinimumFields) {
    if (a.*(f.member) != b.*(f.member)) {
      diff.push_back({f.name, (a.*(f.member)).str(), (b.*(f.member)).str()});
    }
  }
  return diff;
}

}  // namespace costbench
