#include "quivhom/realize.hpp"

#include <map>

namespace quivhom {

std::string backend_name(BackendTag tag) {
  switch (tag) {
    case BackendTag::kExt1Cov: return "ext1";
    case BackendTag::kStableHomCov: return "stablehom";
    case BackendTag::kTor1: return "tor1";
  }
  return "?";
}

BackendTag backend_from_name(const std::string& name) {
  if (name == "ext1") return BackendTag::kExt1Cov;
  if (name == "stablehom") return BackendTag::kStableHomCov;
  if (name == "tor1") return BackendTag::kTor1;
  throw_input("unknown backend: " + name + " (expected ext1|stablehom|tor1)");
}

namespace {

class Ext1Backend final : public FunctorBackend {
 public:
  explicit Ext1Backend(HomCache& cache) : cache_(cache) {}
  BackendTag tag() const override { return BackendTag::kExt1Cov; }
  Variance variance() const override { return Variance::kContravariant; }
  size_t dim(const Rep& x, const Rep& m) override { return cache_.ext(x, m).dim; }
  MatrixModP induced(const RepMap& f, const Rep& m) override {
    return induced_ext_map(cache_, f, m).matrix;
  }

 private:
  HomCache& cache_;
};

class StableHomBackend final : public FunctorBackend {
 public:
  explicit StableHomBackend(HomCache& cache) : cache_(cache) {}
  BackendTag tag() const override { return BackendTag::kStableHomCov; }
  Variance variance() const override { return Variance::kContravariant; }
  size_t dim(const Rep& x, const Rep& m) override { return cache_.stable(x, m).dim; }
  MatrixModP induced(const RepMap& f, const Rep& m) override {
    // precomposition with f on stable Hom(to f, m)
    const StableHomSpace& s_to = cache_.stable(f.to(), m);
    const StableHomSpace& s_from = cache_.stable(f.from(), m);
    const FieldPrime p = m.algebra().field();
    MatrixModP out(s_from.dim, s_to.dim, p);
    for (size_t j = 0; j < s_to.dim; ++j) {
      RepMap rep_j = RepMap::zero(f.to(), m);
      for (size_t i = 0; i < s_to.hom_basis.size(); ++i) {
        uint32_t c = s_to.quot.section.at(i, j);
        if (c) rep_j = rep_j + s_to.hom_basis[i].scaled(c);
      }
      MatrixModP col = stable_class(s_from, compose(rep_j, f));
      for (size_t r = 0; r < s_from.dim; ++r) out.set(r, j, col.at(r, 0));
    }
    return out;
  }

 private:
  HomCache& cache_;
};

class Tor1Backend final : public FunctorBackend {
 public:
  Tor1Backend(HomCache& cache, AlgebraPtr opposite)
      : cache_(cache), opposite_(std::move(opposite)) {}
  BackendTag tag() const override { return BackendTag::kTor1; }
  Variance variance() const override { return Variance::kCovariant; }

  size_t dim(const Rep& x, const Rep& m) override { return tor(x, m).dim; }

  MatrixModP induced(const RepMap& f, const Rep& m) override {
    const TorSpace& tx = tor(f.from(), m);
    const TorSpace& ty = tor(f.to(), m);
    const CoverLift& lift = cache_.lift(f);
    MatrixModP big = tensor_induced_left(tx.omega_tensor, ty.omega_tensor, lift.on_omegas);
    auto sol = solve(ty.basis, big * tx.basis);
    if (!sol) throw_contract("tor backend: induced map escapes the kernel");
    return *sol;
  }

 private:
  const TorSpace& tor(const Rep& x, const Rep& m) {
    auto key = std::make_pair(rep_key(x), rep_key(m));
    auto it = tors_.find(key);
    if (it == tors_.end())
      it = tors_.emplace(std::move(key), tor1_with_syzygy(cache_.syzygy(x), m)).first;
    return it->second;
  }

  HomCache& cache_;
  AlgebraPtr opposite_;
  std::map<std::pair<std::string, std::string>, TorSpace> tors_;
};

}  // namespace

std::unique_ptr<FunctorBackend> make_ext1_backend(HomCache& cache) {
  return std::make_unique<Ext1Backend>(cache);
}
std::unique_ptr<FunctorBackend> make_stable_hom_backend(HomCache& cache) {
  return std::make_unique<StableHomBackend>(cache);
}
std::unique_ptr<FunctorBackend> make_tor1_backend(HomCache& cache, AlgebraPtr opposite) {
  return std::make_unique<Tor1Backend>(cache, std::move(opposite));
}

SummandCertificate realize_summand(HomCache& cache, const Rep& a, const RepMap& f,
                                   BackendTag backend) {
  if (!f.is_endo() || !(f.from() == a)) throw_input("realize_summand: f is not an endomorphism of A");
  if (!is_stably_idempotent(cache, f))
    throw_precondition("realize_summand: f is not stably idempotent");

  std::vector<ChainStep> steps;
  Rep cur_a = a;
  RepMap cur_f = f;
  while (!is_epi(cur_f)) {
    ImageResult img = image(cur_f);
    if (img.rep.total_dim() >= cur_a.total_dim())
      throw_contract("realize_summand: chain failed to descend");
    RepMap g = compose(img.alpha, img.beta);
    RepMap next_f = compose(g, g);
    steps.push_back(ChainStep{cur_a, cur_f, img.alpha, img.beta});
    cur_a = img.rep;
    cur_f = next_f;
    if (!is_stably_idempotent(cache, cur_f))
      throw_contract("realize_summand: descent lost stable idempotency");
    if (steps.size() > a.total_dim())
      throw_contract("realize_summand: chain exceeded the dimension bound");
  }
  RepMap incl = RepMap::identity(cur_a);
  for (size_t i = steps.size(); i-- > 0;) incl = compose(steps[i].beta, incl);
  return SummandCertificate{backend,          std::move(steps), std::move(cur_a),
                            std::move(cur_f), std::move(incl),  "final_endomorphism_epi"};
}

void validate_certificate(HomCache& cache, const SummandCertificate& cert) {
  const size_t n = cert.steps.size();
  if (n > cert.a0().total_dim()) throw_contract("certificate: chain longer than dim A");
  for (size_t i = 0; i < n; ++i) {
    const ChainStep& st = cert.steps[i];
    if (!st.f.is_endo() || !(st.f.from() == st.a)) throw_contract("certificate: step endo mismatch");
    if (!(compose(st.beta, st.alpha) == st.f)) throw_contract("certificate: beta o alpha != f");
    const Rep& next = i + 1 < n ? cert.steps[i + 1].a : cert.b;
    if (!(st.alpha.to() == next)) throw_contract("certificate: chain reps disagree");
    if (!(image(st.f).rep == next)) throw_contract("certificate: A_{i+1} is not the image of f_i");
    if (next.total_dim() >= st.a.total_dim()) throw_contract("certificate: dimension did not drop");
    RepMap g = compose(st.alpha, st.beta);
    const RepMap& next_f = i + 1 < n ? cert.steps[i + 1].f : cert.final_endo;
    if (!(compose(g, g) == next_f)) throw_contract("certificate: f_{i+1} != (alpha o beta)^2");
    if (!is_stably_idempotent(cache, st.f)) throw_contract("certificate: f_i not stably idempotent");
  }
  if (!is_epi(cert.final_endo)) throw_contract("certificate: terminal endomorphism is not epi");
  if (!is_stably_idempotent(cache, cert.final_endo))
    throw_contract("certificate: terminal endomorphism not stably idempotent");
  if (!is_mono(cert.inclusion)) throw_contract("certificate: inclusion is not mono");
  if (cert.terminal_flag != "final_endomorphism_epi") throw_contract("certificate: unknown terminal flag");
}

VerifyReport verify_certificate(FunctorBackend& backend, const SummandCertificate& cert,
                                const std::vector<BatteryEntry>& battery) {
  if (battery.empty()) throw_input("verify_certificate: battery is empty");
  VerifyReport report;
  report.pass = true;
  for (const BatteryEntry& entry : battery) {
    VerifyRow row;
    row.name = entry.name;
    MatrixModP e = backend.induced(cert.f0(), entry.m);
    row.dim_g_a = e.rows();
    row.rank_e = rank(e);
    row.dim_g_b = backend.dim(cert.b, entry.m);
    row.idempotent_ok = e * e == e;
    row.rank_ok = row.rank_e == row.dim_g_b;
    if (backend.tag() == BackendTag::kExt1Cov) {
      MatrixModP res = backend.induced(cert.inclusion, entry.m);
      MatrixModP im_basis = column_space_canonical(e);
      row.restriction_ok = rank(res * im_basis) == row.rank_e;
    }
    row.pass = row.idempotent_ok && row.rank_ok && row.restriction_ok;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace quivhom
