#pragma once

// The descent algorithm: a stably idempotent endomorphism f of A encodes a
// direct summand F of G(A,-); repeatedly replacing A by the image of f and f
// by the square of the induced endomorphism produces a strictly descending
// chain that stops at an epimorphism, exhibiting a submodule B with
// F = G(B,-). Backends: covariant Ext^1, covariant stable Hom, and Tor_1
// (the latter runs over the opposite-side table). The chain itself depends
// only on f; backends matter for verification.

#include <memory>
#include <string>

#include "quivhom/cache.hpp"
#include "quivhom/hilton_rees.hpp"
#include "quivhom/transpose_tor.hpp"

namespace quivhom {

enum class BackendTag { kExt1Cov, kStableHomCov, kTor1 };
enum class Variance { kContravariant, kCovariant };

std::string backend_name(BackendTag tag);
BackendTag backend_from_name(const std::string& name);

class FunctorBackend {
 public:
  virtual ~FunctorBackend() = default;
  virtual BackendTag tag() const = 0;
  virtual Variance variance() const = 0;
  // dim G(x, m)
  virtual size_t dim(const Rep& x, const Rep& m) = 0;
  // matrix of G(f, m): for contravariant backends G(to f, m) -> G(from f, m),
  // for the covariant Tor backend G(from f, m) -> G(to f, m)
  virtual MatrixModP induced(const RepMap& f, const Rep& m) = 0;
};

std::unique_ptr<FunctorBackend> make_ext1_backend(HomCache& cache);
std::unique_ptr<FunctorBackend> make_stable_hom_backend(HomCache& cache);
// X lives over cache's table; the module arguments live over `opposite`.
std::unique_ptr<FunctorBackend> make_tor1_backend(HomCache& cache, AlgebraPtr opposite);

struct ChainStep {
  Rep a;        // A_i
  RepMap f;     // stably idempotent endomorphism of A_i
  RepMap alpha; // A_i ->> A_{i+1} = Im f_i
  RepMap beta;  // A_{i+1} >-> A_i, with beta o alpha = f_i
};

struct SummandCertificate {
  BackendTag backend = BackendTag::kExt1Cov;
  std::vector<ChainStep> steps;  // the non-terminal steps
  Rep b;                         // A_n
  RepMap final_endo;             // f_n, an epimorphism (hence iso)
  RepMap inclusion;              // B -> A_0, composite of the betas
  std::string terminal_flag;     // why the loop stopped

  const Rep& a0() const { return steps.empty() ? b : steps.front().a; }
  const RepMap& f0() const { return steps.empty() ? final_endo : steps.front().f; }
};

SummandCertificate realize_summand(HomCache& cache, const Rep& a, const RepMap& f,
                                   BackendTag backend);

// Re-checks every structural certificate invariant; throws on violation.
void validate_certificate(HomCache& cache, const SummandCertificate& cert);

struct BatteryEntry {
  std::string name;
  Rep m;
};

struct VerifyRow {
  std::string name;
  size_t dim_g_a = 0;   // dim G(A_0, M)
  size_t rank_e = 0;    // rank of the induced idempotent e_M
  size_t dim_g_b = 0;   // dim G(B, M)
  bool idempotent_ok = false;
  bool rank_ok = false;
  bool restriction_ok = true;  // Ext backend only
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool pass = false;
};

VerifyReport verify_certificate(FunctorBackend& backend, const SummandCertificate& cert,
                                const std::vector<BatteryEntry>& battery);

}  // namespace quivhom
