#pragma once

#include "elemop/matrix.hpp"
#include "elemop/operator.hpp"
#include "elemop/theorems.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace elemop {

struct GeneratorConfig {
  std::size_t dim = 3;
  unsigned entry_bound = 3;  ///< numerators in [-bound, bound], denominators in [1, bound]
  std::uint64_t seed = 0;
  bool gaussian = false;     ///< allow nonzero imaginary parts
};

/// SplitMix64 step; derives independent per-trial seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic instance source. Draws come from mt19937_64 with a
/// portable bounded-integer reduction, so a config reproduces the same
/// sequence on every platform.
class Generator {
public:
  explicit Generator(GeneratorConfig config);

  const GeneratorConfig &config() const { return config_; }

  long integer(long lo, long hi);
  bool coin();
  GaussianRational scalar();
  GaussianRational nonzero_scalar();
  Matrix matrix();
  Matrix matrix(std::size_t rows, std::size_t cols);

  /// Integer unimodular S and its exact inverse, built from 2*dim random
  /// elementary row operations.
  std::pair<Matrix, Matrix> unimodular();

  /// S U S^-1 with U strictly upper triangular and S an integer unimodular
  /// product of elementary row operations.
  Matrix nilpotent();

  /// Random polynomials p_j (degree < dim) evaluated at seed. Flagged entries
  /// get zero constant term; flags require a nilpotent seed (PreconditionError).
  std::vector<Matrix> commuting_tuple(const Matrix &seed, std::size_t poly_count,
                                      const std::vector<bool> &nilpotent_flags);

private:
  GeneratorConfig config_;
  std::mt19937_64 engine_;
};

/// c[0] I + c[1] m + c[2] m^2 + ...
Matrix eval_poly(const std::vector<GaussianRational> &coeffs, const Matrix &m);

Matrix gen_nilpotent(const GeneratorConfig &config);
std::vector<Matrix> gen_commuting_tuple(const GeneratorConfig &config, const Matrix &seed,
                                        std::size_t poly_count,
                                        const std::vector<bool> &nilpotent_flags);

/// One recorded instance: its operands and the check outcome.
struct InstanceDump {
  std::size_t trial;
  std::string kind;
  std::vector<Matrix> a;
  std::vector<Matrix> b;
  std::vector<GaussianRational> scalars;
  std::string note;
};

struct SweepReport {
  std::string theorem;
  std::string mode;          ///< "exhaustive" or "random"
  GeneratorConfig config;
  std::size_t trials = 0;
  std::size_t instances_tested = 0;
  std::size_t hypothesis_instances = 0;
  /// Side identities checked alongside the main instances (the prefix/last
  /// commutation fact, the shifted-V residual).
  std::size_t auxiliary_checks = 0;
  std::vector<InstanceDump> violations;
  std::vector<InstanceDump> converse_failures;

  bool passed() const { return violations.empty(); }
};

/// Every 2x2 matrix with entries in {-1, 0, 1}, in lexicographic order.
std::vector<Matrix> small_matrices_2x2();

/// All 6561 ordered pairs of small_matrices_2x2 through thm21_criterion.
SweepReport sweep_thm21_exhaustive();

/// All 6561 ordered pairs through fong_sourour_check.
SweepReport sweep_fong_sourour_exhaustive();

enum class SweepTheorem { Thm22, Thm23, FongSourour };

/// Hypothesis-satisfying instances per trial plus hypothesis-free instances
/// (one per four trials, at least one) harvested for converse failures.
/// Thm23 trials additionally check the shifted-V identity on an arbitrary
/// (a, b, lambda, mu).
SweepReport sweep_thm(SweepTheorem theorem, const GeneratorConfig &config, std::size_t trials);

enum class SearchTarget { Thm21Extension, Thm22, Thm23 };

/// Seed instance for the converse search: the pair (a, b) of V_{a,b}.
struct SeedPair {
  std::string label;
  Matrix a;
  Matrix b;
};

/// Reports instances whose operator is nilpotent while the target's
/// hypotheses fail. Seeds are examined first (trial index = position),
/// then `trials` sampled V-operators (half of them built to be nilpotent
/// through a nilpotent difference commuting with b).
SweepReport search_converse_failures(SearchTarget target, const GeneratorConfig &config,
                                     std::size_t trials,
                                     const std::vector<SeedPair> &seeds = {});

struct Example31Record {
  Matrix a, b, ab, ba, a_sq, b_sq, aba, bab, s, s_cubed;
  std::vector<Matrix> basis_images;  ///< V(E11), V(E12), V(E21), V(E22)
  NilpotencyReport v_nilpotency;
  bool ab_ne_ba, a_sq_zero, b_sq_zero, aba_eq_a, bab_eq_b, s_cubed_plus_s_zero,
      v_is_diagonal_swap, v_not_nilpotent;

  bool all_hold() const;
};

/// Non-commuting pair with V^3 = -V. Throws IntegrityError if any fact fails.
Example31Record example_3_1();

struct Example32Params {
  GaussianRational a{1}, b{2}, c{3}, d{0}, k{3};
};

struct Example32Record {
  Example32Params params;
  Matrix a, b, ab, ba, n;
  std::vector<GaussianRational> char_poly_a, char_poly_b;
  NilpotencyReport n_nilpotency, a_nilpotency, b_nilpotency, v_nilpotency;
  ShiftWitness shift_a, shift_b;
  TheoremCheckResult thm22_on_vnb;
  bool ab_eq_ba, n_nilpotent, v_ab_eq_v_nb, thm22_hypotheses_hold, v_nilpotent,
      a_not_nilpotent, b_not_nilpotent, no_shift_a, no_shift_b;

  bool all_hold() const;
};

/// The block family with a + b = c + d = k != 0 and b + c != 0.
/// PreconditionError names the violated constraint; IntegrityError if a fact fails.
Example32Record example_3_2(const Example32Params &params = {});

Matrix example_3_2_a(const Example32Params &p);
Matrix example_3_2_b(const Example32Params &p);

} // namespace elemop
