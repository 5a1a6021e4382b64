#include "rsched/embeddings.hpp"

#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"

namespace rsched {

RARInstance rai_to_rar2(const RAIInstance& rai) {
  const auto& base = rai.base();
  const auto m = static_cast<std::int64_t>(base.machine_count());
  std::vector<RARMachine> machines;
  for (std::size_t i = 0; i < base.machine_count(); ++i) {
    const auto p = static_cast<std::int64_t>(rai.position(i)) + 1;
    machines.push_back({base.machine(i).id, {Rational(p), Rational(m + 1 - p)}, base.machine(i).tag});
  }
  std::vector<RARJob> jobs;
  for (std::size_t j = 0; j < base.job_count(); ++j) {
    const auto& iv = rai.interval(j);
    const auto l = static_cast<std::int64_t>(iv.first) + 1;
    const auto r = static_cast<std::int64_t>(iv.last) + 1;
    jobs.push_back({base.job(j).id, base.job(j).size, {Rational(l), Rational(m + 1 - r)}, base.job(j).tag});
  }
  return RARInstance(2, std::move(machines), std::move(jobs));
}

RARInstance ra_to_rar_m(const RAInstance& ra) {
  const auto m = ra.machine_count();
  std::vector<RARMachine> machines;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> cap(m, Rational(1));
    cap[i] = Rational(0);
    machines.push_back({ra.machine(i).id, std::move(cap), ra.machine(i).tag});
  }
  std::vector<RARJob> jobs;
  for (std::size_t j = 0; j < ra.job_count(); ++j) {
    std::vector<Rational> demand(m, Rational(1));
    for (const auto r : ra.eligible(j)) demand[r] = Rational(0);
    jobs.push_back({ra.job(j).id, ra.job(j).size, std::move(demand), ra.job(j).tag});
  }
  return RARInstance(m, std::move(machines), std::move(jobs));
}

RAInstance witness_rar_m(int m) {
  if (m < 2) throw ValidationError("witness_rar_m: m must be at least 2");
  RAInstanceBuilder b;
  for (int i = 1; i <= m; ++i) b.add_machine("M" + std::to_string(i));
  // Dropping machine m, m-1, ..., 1 yields the subsets in lexicographic order.
  for (int skip = m; skip >= 1; --skip) {
    std::string id = "J";
    std::vector<std::size_t> eligible;
    for (int i = 1; i <= m; ++i) {
      if (i == skip) continue;
      id += "_" + std::to_string(i);
      eligible.push_back(static_cast<std::size_t>(i - 1));
    }
    b.add_job(id, Rational(1), std::move(eligible));
  }
  return std::move(b).build();
}

LRSInstance rar_to_lrs(const RARInstance& rar, const Rational& eps, const Rational& K) {
  const auto R = rar.resource_count();
  if (R == 0) throw ValidationError("rar_to_lrs: instance has no resources");
  if (eps.sign() <= 0 || K.sign() <= 0) throw ValidationError("rar_to_lrs: eps and K must be positive");
  const auto norm = normalize(rar);
  const Rational delta = eps / Rational(static_cast<std::int64_t>(R));
  Rational big = K / delta;
  if (big < Rational(1)) big = Rational(1);

  std::vector<LRSMachine> machines;
  for (const auto& mach : norm.machines()) {
    std::vector<Rational> speed;
    for (const auto& c : mach.capacity) speed.push_back(big.pow(-static_cast<int>(c.to_int64())));
    speed.emplace_back(1);
    machines.push_back({mach.id, std::move(speed), mach.tag});
  }
  std::vector<LRSJob> jobs;
  for (const auto& job : norm.jobs()) {
    std::vector<Rational> size;
    for (const auto& d : job.demand) size.push_back(delta * big.pow(static_cast<int>(d.to_int64())));
    size.push_back(job.size);
    jobs.push_back({job.id, std::move(size), job.tag});
  }
  return LRSInstance(R + 1, std::move(machines), std::move(jobs));
}

RARInstance witness_rar2_not_rai() {
  std::vector<RARMachine> machines{
      {"1", {Rational(3), Rational(3)}, std::nullopt},
      {"2", {Rational(4), Rational(1)}, std::nullopt},
      {"3", {Rational(2), Rational(2)}, std::nullopt},
      {"4", {Rational(1), Rational(4)}, std::nullopt},
  };
  std::vector<RARJob> jobs{
      {"j1234", Rational(1), {Rational(1, 2), Rational(1, 2)}, std::nullopt},
      {"j12", Rational(1), {Rational(5, 2), Rational(3, 4)}, std::nullopt},
      {"j13", Rational(1), {Rational(3, 2), Rational(3, 2)}, std::nullopt},
      {"j14", Rational(1), {Rational(3, 4), Rational(5, 2)}, std::nullopt},
  };
  return RARInstance(2, std::move(machines), std::move(jobs));
}

ReductionOutput embed_rai_to_rar2(const RAIInstance& rai) {
  return ReductionOutput{ReductionKind::Rai2Rar2, rai_to_rar2(rai), std::nullopt, AnyInstance{rai}};
}

ReductionOutput embed_ra_to_rar_m(const RAInstance& ra) {
  return ReductionOutput{ReductionKind::Ra2RarM, ra_to_rar_m(ra), std::nullopt, AnyInstance{ra}};
}

ReductionOutput embed_rar_to_lrs(const RARInstance& rar, const Rational& eps, const Rational& K) {
  return ReductionOutput{ReductionKind::Rar2Lrs, rar_to_lrs(rar, eps, K), std::nullopt, AnyInstance{rar}};
}

}  // namespace rsched
