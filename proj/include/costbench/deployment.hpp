#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "costbench/pricing.hpp"
#include "costbench/usecase.hpp"

namespace costbench {

// Platform rule mapping function memory to its vCPU share, rounded to four
// decimals; 256 MB maps to 0.1667 vCPU.
Dec vcpu_fraction_for_memory(std::int64_t memory_mb);

struct FaasDeployment {
  std::int64_t memory_mb = 256;
  Dec vcpu_fraction;            // derived from memory_mb
  std::int64_t duration_ms = 0; // mean invocation duration; runtime and
                                // transport variants enter only through this
  AccessProfile access;
  std::string label;

  static FaasDeployment make(std::int64_t memory_mb, std::int64_t duration_ms,
                             AccessProfile access, std::string label);
};

enum class DspKind { self_managed_k8s, serverless_dsp, serverless_k8s };

std::string to_string(DspKind kind);
DspKind dsp_kind_from_string(const std::string& s);

struct DspDeployment {
  DspKind kind = DspKind::self_managed_k8s;
  std::int64_t slots_per_node = 4;       // taskmanager slots per VM
  std::int64_t fixed_overhead_slots = 3; // coordinator/broker/monitoring
  AccessProfile access;
  Dec per_instance_vcpu;                 // container sizing (serverless-k8s)
  Dec per_instance_gb;
  std::string label;

  static DspDeployment make(DspKind kind, std::int64_t slots_per_node,
                            std::int64_t fixed_overhead_slots,
                            AccessProfile access, Dec per_instance_vcpu,
                            Dec per_instance_gb, std::string label);
};

using Deployment = std::variant<FaasDeployment, DspDeployment>;

const std::string& deployment_label(const Deployment& dep);
const AccessProfile& deployment_access(const Deployment& dep);

enum class Dimension {
  invocation,
  compute_duration,
  db_read,
  db_write,
  message,
  vm,
  cluster_fee,
  lb_fee,
  container,
};

constexpr std::size_t kDimensionCount = 9;
constexpr std::array<Dimension, kDimensionCount> kAllDimensions = {
    Dimension::invocation, Dimension::compute_duration, Dimension::db_read,
    Dimension::db_write,   Dimension::message,          Dimension::vm,
    Dimension::cluster_fee, Dimension::lb_fee,          Dimension::container,
};

std::string to_string(Dimension d);

// USD per hour of steady-state operation, decomposed by dimension.
// total is always the exact sum of components.
struct HourlyCost {
  Dec total;
  std::array<Dec, kDimensionCount> components{};

  Dec& operator[](Dimension d) { return components[static_cast<std::size_t>(d)]; }
  Dec component(Dimension d) const {
    return components[static_cast<std::size_t>(d)];
  }
  void finalize();  // recomputes total from components

  bool operator==(const HourlyCost&) const = default;
};

// Pure per-request model: every component scales linearly through the
// origin in the arrival rate.
HourlyCost faas_hourly_cost(const FaasDeployment& dep, const Rational& lambda,
                            const PricingCatalog& catalog);

// Fixed fees plus per-request costs plus capacity that comes in steps of
// instances (and, for self-managed clusters, whole VMs).
HourlyCost dsp_hourly_cost(const DspDeployment& dep, const Rational& lambda,
                           const PricingCatalog& catalog, std::int64_t m_star);

// Fraction of total per dimension; fractions sum to 1 within 1e-9.
std::array<double, kDimensionCount> cost_shares(const HourlyCost& cost);

}  // namespace costbench
