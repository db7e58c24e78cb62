#include "costbench/deployment.hpp"

#include "costbench/errors.hpp"

namespace costbench {

namespace {

// events/hour = lambda * 3600, applied to a per-event price.
Dec hourly(Dec per_event, const Rational& lambda) {
  return per_event.mul_ratio(lambda.num * 3600, lambda.den);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

Dec vcpu_fraction_for_memory(std::int64_t memory_mb) {
  // memory_mb / 1536, rounded to 4 decimals: 256 MB -> 0.1667 vCPU.
  Dec raw = Dec::from_int(memory_mb).mul_ratio(1, 1536);
  return Dec::from_units(raw.mul_ratio(1, 100'000'000).units() * 100'000'000);
}

FaasDeployment FaasDeployment::make(std::int64_t memory_mb,
                                    std::int64_t duration_ms,
                                    AccessProfile access, std::string label) {
  if (memory_mb <= 0) throw ValidationError("memory_mb", "must be > 0");
  if (duration_ms <= 0) throw ValidationError("duration_ms", "must be > 0");
  if (access.db_reads_per_event < 0 || access.db_writes_per_event < 0 ||
      access.messages_per_event < 0) {
    throw ValidationError("access", "per-event counts must be >= 0");
  }
  FaasDeployment dep;
  dep.memory_mb = memory_mb;
  dep.vcpu_fraction = vcpu_fraction_for_memory(memory_mb);
  dep.duration_ms = duration_ms;
  dep.access = access;
  dep.label = std::move(label);
  return dep;
}

std::string to_string(DspKind kind) {
  switch (kind) {
    case DspKind::self_managed_k8s: return "self-managed-k8s";
    case DspKind::serverless_dsp: return "serverless-dsp";
    case DspKind::serverless_k8s: return "serverless-k8s";
  }
  return "unknown";
}

DspKind dsp_kind_from_string(const std::string& s) {
  if (s == "self-managed-k8s") return DspKind::self_managed_k8s;
  if (s == "serverless-dsp") return DspKind::serverless_dsp;
  if (s == "serverless-k8s") return DspKind::serverless_k8s;
  throw ValidationError("kind", "unknown deployment kind '" + s + "'");
}

DspDeployment DspDeployment::make(DspKind kind, std::int64_t slots_per_node,
                                  std::int64_t fixed_overhead_slots,
                                  AccessProfile access, Dec per_instance_vcpu,
                                  Dec per_instance_gb, std::string label) {
  if (slots_per_node < 1) throw ValidationError("slots_per_node", "must be >= 1");
  if (fixed_overhead_slots < 0) {
    throw ValidationError("fixed_overhead_slots", "must be >= 0");
  }
  if (access.db_reads_per_event < 0 || access.db_writes_per_event < 0 ||
      access.messages_per_event < 0) {
    throw ValidationError("access", "per-event counts must be >= 0");
  }
  if (per_instance_vcpu.is_negative() || per_instance_gb.is_negative()) {
    throw ValidationError("per_instance", "sizes must be >= 0");
  }
  DspDeployment dep;
  dep.kind = kind;
  dep.slots_per_node = slots_per_node;
  dep.fixed_overhead_slots = fixed_overhead_slots;
  dep.access = access;
  dep.per_instance_vcpu = per_instance_vcpu;
  dep.per_instance_gb = per_instance_gb;
  dep.label = std::move(label);
  return dep;
}

const std::string& deployment_label(const Deployment& dep) {
  return std::visit([](const auto& d) -> const std::string& { return d.label; }, dep);
}

const AccessProfile& deployment_access(const Deployment& dep) {
  return std::visit([](const auto& d) -> const AccessProfile& { return d.access; },
                    dep);
}

std::string to_string(Dimension d) {
  switch (d) {
    case Dimension::invocation: return "invocation";
    case Dimension::compute_duration: return "compute_duration";
    case Dimension::db_read: return "db_read";
    case Dimension::db_write: return "db_write";
    case Dimension::message: return "message";
    case Dimension::vm: return "vm";
    case Dimension::cluster_fee: return "cluster_fee";
    case Dimension::lb_fee: return "lb_fee";
    case Dimension::container: return "container";
  }
  return "unknown";
}

void HourlyCost::finalize() {
  total = Dec();
  for (const Dec& c : components) total += c;
}

HourlyCost faas_hourly_cost(const FaasDeployment& dep, const Rational& lambda,
                            const PricingCatalog& catalog) {
  // GB-seconds per invocation: (memory_mb / 1024) * (duration_ms / 1000)
  Dec compute_per_event = catalog.per_gb_second.mul_ratio(
      dep.memory_mb * dep.duration_ms, 1024 * 1000);
  HourlyCost cost;
  cost[Dimension::invocation] = hourly(catalog.per_invocation, lambda);
  cost[Dimension::compute_duration] = hourly(compute_per_event, lambda);
  cost[Dimension::db_read] =
      hourly(catalog.per_db_read.scaled_by(dep.access.db_reads_per_event), lambda);
  cost[Dimension::db_write] =
      hourly(catalog.per_db_write.scaled_by(dep.access.db_writes_per_event), lambda);
  cost[Dimension::message] =
      hourly(catalog.per_message.scaled_by(dep.access.messages_per_event), lambda);
  cost.finalize();
  return cost;
}

HourlyCost dsp_hourly_cost(const DspDeployment& dep, const Rational& lambda,
                           const PricingCatalog& catalog, std::int64_t m_star) {
  if (m_star < 1) throw InvalidCapacity(m_star);
  HourlyCost cost;
  cost[Dimension::db_read] =
      hourly(catalog.per_db_read.scaled_by(dep.access.db_reads_per_event), lambda);
  cost[Dimension::db_write] =
      hourly(catalog.per_db_write.scaled_by(dep.access.db_writes_per_event), lambda);
  cost[Dimension::message] =
      hourly(catalog.per_message.scaled_by(dep.access.messages_per_event), lambda);

  std::int64_t slots = m_star + dep.fixed_overhead_slots;
  switch (dep.kind) {
    case DspKind::self_managed_k8s: {
      std::int64_t nodes = std::max<std::int64_t>(
          1, ceil_div(slots, dep.slots_per_node));
      cost[Dimension::vm] = catalog.per_vm_hour.scaled_by(nodes);
      cost[Dimension::cluster_fee] = catalog.cluster_fee_per_hour;
      cost[Dimension::lb_fee] = catalog.lb_fee_per_hour;
      break;
    }
    case DspKind::serverless_dsp:
      // Hosted engine: workers are billed directly, no managing fees.
      cost[Dimension::vm] = catalog.per_vm_hour.scaled_by(m_star);
      break;
    case DspKind::serverless_k8s: {
      Dec vcpu = std::max(dep.per_instance_vcpu, catalog.container_min_vcpu);
      Dec gb = std::max(dep.per_instance_gb, catalog.container_min_gb);
      Dec per_container = vcpu.times(catalog.per_container_vcpu_hour) +
                          gb.times(catalog.per_container_gb_hour);
      cost[Dimension::container] = per_container.scaled_by(slots);
      cost[Dimension::cluster_fee] = catalog.cluster_fee_per_hour;
      cost[Dimension::lb_fee] = catalog.lb_fee_per_hour;
      break;
    }
  }
  cost.finalize();
  return cost;
}

std::array<double, kDimensionCount> cost_shares(const HourlyCost& cost) {
  if (cost.total.is_zero()) throw ZeroTotal();
  std::array<double, kDimensionCount> shares{};
  double total = static_cast<double>(cost.total.units());
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    shares[i] = static_cast<double>(cost.components[i].units()) / total;
  }
  return shares;
}

}  // namespace costbench
