#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "costbench/decimal.hpp"
#include "costbench/kvfile.hpp"

namespace costbench {

// Container minimums billed by serverless Kubernetes offerings when a pod
// requests less than the platform floor.
inline const Dec kDefaultContainerMinVcpu = Dec::parse("0.25");
inline const Dec kDefaultContainerMinGb = Dec::parse("0.5");

// Unit prices for one provider/flavor scenario. One flat catalog per
// scenario; comparisons across providers or transports swap catalogs.
struct PricingCatalog {
  Dec per_invocation;          // USD per function invocation
  Dec per_gb_second;           // USD per GB-second of function memory-time
  Dec per_db_read;             // USD per database read
  Dec per_db_write;            // USD per database write
  Dec per_message;             // USD per transport message (0 for plain HTTP)
  Dec per_vm_hour;             // USD per hour for the configured VM type
  Dec cluster_fee_per_hour;    // managed-Kubernetes fee
  Dec lb_fee_per_hour;         // HTTP load balancer fee
  Dec per_container_vcpu_hour; // serverless-Kubernetes vCPU-hour
  Dec per_container_gb_hour;   // serverless-Kubernetes GB-hour
  Dec container_min_vcpu = kDefaultContainerMinVcpu;
  Dec container_min_gb = kDefaultContainerMinGb;
  std::string label;
  std::string source;  // price-sheet URL(s); informational, not diffed

  bool operator==(const PricingCatalog&) const = default;
};

PricingCatalog catalog_from_kv(const KvFile& kv);
PricingCatalog load_catalog(const std::filesystem::path& path);

std::string serialize_catalog(const PricingCatalog& catalog);
void save_catalog(const PricingCatalog& catalog, const std::filesystem::path& path);

struct CatalogDiffEntry {
  std::string field;
  std::string a_value;
  std::string b_value;

  bool operator==(const CatalogDiffEntry&) const = default;
};

// Every field where the two catalogs differ; empty when identical.
std::vector<CatalogDiffEntry> catalog_diff(const PricingCatalog& a,
                                           const PricingCatalog& b);

}  // namespace costbench
