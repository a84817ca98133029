#include "elemop/lab.hpp"
#include "elemop/error.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace elemop {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Generator::Generator(GeneratorConfig config) : config_(config), engine_(config.seed) {
  if (config_.dim == 0)
    throw PreconditionError("generator dimension must be positive");
  if (config_.entry_bound == 0)
    throw PreconditionError("generator entry bound must be positive");
}

long Generator::integer(long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % range);
}

bool Generator::coin() { return integer(0, 1) == 1; }

GaussianRational Generator::scalar() {
  const long bound = config_.entry_bound;
  const long re_num = integer(-bound, bound);
  const long re_den = integer(1, bound);
  long im_num = 0, im_den = 1;
  if (config_.gaussian) {
    im_num = integer(-bound, bound);
    im_den = integer(1, bound);
  }
  return GaussianRational::from_parts(re_num, re_den, im_num, im_den);
}

GaussianRational Generator::nonzero_scalar() {
  GaussianRational z;
  do {
    z = scalar();
  } while (z.is_zero());
  return z;
}

Matrix Generator::matrix() { return matrix(config_.dim, config_.dim); }

Matrix Generator::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = scalar();
  return m;
}

std::pair<Matrix, Matrix> Generator::unimodular() {
  const std::size_t n = config_.dim;
  Matrix s = Matrix::identity(n);
  Matrix s_inv = Matrix::identity(n);
  if (n == 1)
    return {s, s_inv};
  const long bound = config_.entry_bound;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
    if (j >= i)
      ++j;
    const GaussianRational c(integer(-bound, bound));
    Matrix e = Matrix::identity(n);
    e(i, j) = c;
    Matrix e_inv = Matrix::identity(n);
    e_inv(i, j) = -c;
    s = e * s;
    s_inv = s_inv * e_inv;
  }
  return {s, s_inv};
}

Matrix Generator::nilpotent() {
  const std::size_t n = config_.dim;
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      u(i, j) = scalar();
  auto [s, s_inv] = unimodular();
  return s * u * s_inv;
}

std::vector<Matrix> Generator::commuting_tuple(const Matrix &seed, std::size_t poly_count,
                                               const std::vector<bool> &nilpotent_flags) {
  if (!seed.is_square() || seed.rows() != config_.dim)
    throw ShapeError("commuting_tuple: seed must be " + std::to_string(config_.dim) + "x" +
                     std::to_string(config_.dim) + ", got " + seed.shape_str());
  if (nilpotent_flags.size() != poly_count)
    throw PreconditionError("commuting_tuple: " + std::to_string(nilpotent_flags.size()) +
                            " flags for " + std::to_string(poly_count) + " polynomials");
  const bool wants_nilpotent =
      std::any_of(nilpotent_flags.begin(), nilpotent_flags.end(), [](bool f) { return f; });
  if (wants_nilpotent && !is_nilpotent(seed).nilpotent)
    throw PreconditionError("commuting_tuple: nilpotent outputs requested but the seed is not nilpotent");

  std::vector<Matrix> out;
  out.reserve(poly_count);
  for (std::size_t p = 0; p < poly_count; ++p) {
    std::vector<GaussianRational> coeffs(config_.dim);
    for (auto &c : coeffs)
      c = scalar();
    if (nilpotent_flags[p])
      coeffs[0] = 0;
    out.push_back(eval_poly(coeffs, seed));
  }
  return out;
}

Matrix eval_poly(const std::vector<GaussianRational> &coeffs, const Matrix &m) {
  if (!m.is_square())
    throw ShapeError("eval_poly: expected a square matrix, got " + m.shape_str());
  Matrix acc(m.rows(), m.rows());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i)
      acc(i, i) += *it;
  }
  return acc;
}

Matrix gen_nilpotent(const GeneratorConfig &config) { return Generator(config).nilpotent(); }

std::vector<Matrix> gen_commuting_tuple(const GeneratorConfig &config, const Matrix &seed,
                                        std::size_t poly_count,
                                        const std::vector<bool> &nilpotent_flags) {
  return Generator(config).commuting_tuple(seed, poly_count, nilpotent_flags);
}

// ---------------------------------------------------------------------------
// sweeps

std::vector<Matrix> small_matrices_2x2() {
  std::vector<Matrix> out;
  out.reserve(81);
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        for (long d = -1; d <= 1; ++d)
          out.push_back(Matrix{{a, b}, {c, d}});
  return out;
}

namespace {

InstanceDump dump(std::size_t trial, std::string kind, std::vector<Matrix> a, std::vector<Matrix> b,
                  std::string note, std::vector<GaussianRational> scalars = {}) {
  return {trial, std::move(kind), std::move(a), std::move(b), std::move(scalars), std::move(note)};
}

std::string join_failures(const TheoremCheckResult &r) {
  std::string out;
  for (const auto &f : r.hypothesis_failures)
    out += (out.empty() ? "" : "; ") + f;
  return out;
}

template <typename Check>
SweepReport exhaustive_pairs(std::string theorem, Check check) {
  SweepReport report;
  report.theorem = std::move(theorem);
  report.mode = "exhaustive";
  report.config = GeneratorConfig{2, 1, 0, false};
  const auto mats = small_matrices_2x2();
  for (const auto &a : mats)
    for (const auto &b : mats) {
      const std::size_t idx = report.instances_tested++;
      try {
        if (check(a, b).hypotheses_hold)
          ++report.hypothesis_instances;
      } catch (const IntegrityError &e) {
        report.violations.push_back(dump(idx, "pair", {a}, {b}, e.what()));
      }
    }
  report.trials = report.instances_tested;
  return report;
}

Matrix scalar_plus(const GaussianRational &lambda, const Matrix &n) {
  return lambda * Matrix::identity(n.rows()) + n;
}

void sweep_thm22_trial(Generator &g, std::size_t t, SweepReport &report) {
  const auto len = static_cast<std::size_t>(g.integer(2, 3));
  const Matrix seed_a = g.nilpotent();
  const Matrix seed_b = g.nilpotent();
  std::vector<bool> flags_a(len), flags_b(len);
  for (std::size_t i = 0; i < len; ++i) {
    flags_a[i] = g.coin();
    flags_b[i] = !flags_a[i] || g.coin();
  }
  auto a = g.commuting_tuple(seed_a, len, flags_a);
  auto b = g.commuting_tuple(seed_b, len, flags_b);

  ++report.instances_tested;
  const auto r = thm22_check(a, b);
  if (!r.hypotheses_hold) {
    report.violations.push_back(dump(t, "thm22:generated", a, b,
                                     "generated instance fails hypotheses: " + join_failures(r)));
    return;
  }
  ++report.hypothesis_instances;
  if (!r.conclusion.nilpotent)
    report.violations.push_back(dump(t, "thm22:generated", a, b, "R_{A,B} not nilpotent"));
  ++report.auxiliary_checks;
  if (!prefix_commutes_with_last(a, b))
    report.violations.push_back(
        dump(t, "thm22:commutation", a, b, "prefix operator does not commute with last term"));
}

void sweep_thm23_trial(Generator &g, std::size_t t, SweepReport &report) {
  const Matrix seed = g.nilpotent();
  auto nils = g.commuting_tuple(seed, 2, {true, true});
  const GaussianRational lambda = g.scalar();
  const GaussianRational mu = g.scalar();
  const Matrix a = scalar_plus(lambda, nils[0]);
  const Matrix b = scalar_plus(mu, nils[1]);

  ++report.instances_tested;
  const auto r = thm23_check(a, b);
  if (!r.hypotheses_hold) {
    report.violations.push_back(dump(t, "thm23:generated", {a}, {b},
                                     "generated instance fails hypotheses: " + join_failures(r),
                                     {lambda, mu}));
  } else {
    ++report.hypothesis_instances;
    if (!r.conclusion.nilpotent)
      report.violations.push_back(dump(t, "thm23:generated", {a}, {b}, "V_{A,B} not nilpotent", {lambda, mu}));
  }

  // Shifted-V identity on an unrelated, generally non-commuting tuple.
  const Matrix ra = g.matrix();
  const Matrix rb = g.matrix();
  const GaussianRational rl = g.scalar();
  const GaussianRational rm = g.scalar();
  ++report.auxiliary_checks;
  if (!superoperator(eq1_identity_residual(ra, rb, rl, rm)).is_zero())
    report.violations.push_back(dump(t, "eq1:residual", {ra}, {rb}, "nonzero residual", {rl, rm}));
}

void sweep_fong_sourour_trial(Generator &g, std::size_t t, SweepReport &report) {
  Matrix s, u;
  switch (t % 4) {
  case 0:
  case 2: {
    const GaussianRational lambda = g.scalar();
    s = scalar_plus(lambda, g.nilpotent());
    u = scalar_plus(lambda, g.nilpotent());
    break;
  }
  case 1: {
    const GaussianRational lambda = g.scalar();
    GaussianRational mu = g.scalar();
    while (mu == lambda)
      mu = g.scalar();
    s = scalar_plus(lambda, g.nilpotent());
    u = scalar_plus(mu, g.nilpotent());
    break;
  }
  default:
    s = g.matrix();
    u = g.matrix();
  }
  ++report.instances_tested;
  try {
    if (fong_sourour_check(s, u).hypotheses_hold)
      ++report.hypothesis_instances;
  } catch (const IntegrityError &e) {
    report.violations.push_back(dump(t, "fong_sourour", {s}, {u}, e.what()));
  }
}

void free_trial(SweepTheorem theorem, Generator &g, std::size_t t, SweepReport &report) {
  ++report.instances_tested;
  switch (theorem) {
  case SweepTheorem::Thm22: {
    std::vector<Matrix> a{g.matrix(), g.matrix()};
    std::vector<Matrix> b{g.matrix(), g.matrix()};
    const auto r = thm22_check(a, b);
    if (r.hypotheses_hold) {
      ++report.hypothesis_instances;
      if (!r.conclusion.nilpotent)
        report.violations.push_back(dump(t, "thm22:free", a, b, "R_{A,B} not nilpotent"));
    } else if (r.conclusion.nilpotent) {
      report.converse_failures.push_back(dump(t, "thm22:free", a, b, join_failures(r)));
    }
    break;
  }
  case SweepTheorem::Thm23: {
    const Matrix seed = g.matrix();
    auto polys = g.commuting_tuple(seed, 2, {false, false});
    const auto r = thm23_check(polys[0], polys[1]);
    if (r.hypotheses_hold) {
      ++report.hypothesis_instances;
      if (!r.conclusion.nilpotent)
        report.violations.push_back(dump(t, "thm23:free", {polys[0]}, {polys[1]}, "V_{A,B} not nilpotent"));
    } else if (r.conclusion.nilpotent) {
      report.converse_failures.push_back(dump(t, "thm23:free", {polys[0]}, {polys[1]}, join_failures(r)));
    }
    break;
  }
  case SweepTheorem::FongSourour: {
    const Matrix s = g.matrix();
    const Matrix u = g.matrix();
    try {
      if (fong_sourour_check(s, u).hypotheses_hold)
        ++report.hypothesis_instances;
    } catch (const IntegrityError &e) {
      report.violations.push_back(dump(t, "fong_sourour:free", {s}, {u}, e.what()));
    }
    break;
  }
  }
}

const char *theorem_name(SweepTheorem theorem) {
  switch (theorem) {
  case SweepTheorem::Thm22:
    return "2.2";
  case SweepTheorem::Thm23:
    return "2.3";
  case SweepTheorem::FongSourour:
    return "1.1";
  }
  return "?";
}

} // namespace

SweepReport sweep_thm21_exhaustive() { return exhaustive_pairs("2.1", thm21_criterion); }

SweepReport sweep_fong_sourour_exhaustive() { return exhaustive_pairs("1.1", fong_sourour_check); }

SweepReport sweep_thm(SweepTheorem theorem, const GeneratorConfig &config, std::size_t trials) {
  if (trials == 0)
    throw PreconditionError("sweep_thm: trials must be at least 1");
  SweepReport report;
  report.theorem = theorem_name(theorem);
  report.mode = "random";
  report.config = config;
  report.trials = trials;

  auto sub = [&](std::size_t index) {
    GeneratorConfig c = config;
    c.seed = derive_seed(config.seed, index);
    return Generator(c);
  };

  for (std::size_t t = 0; t < trials; ++t) {
    Generator g = sub(t);
    switch (theorem) {
    case SweepTheorem::Thm22:
      sweep_thm22_trial(g, t, report);
      break;
    case SweepTheorem::Thm23:
      sweep_thm23_trial(g, t, report);
      break;
    case SweepTheorem::FongSourour:
      sweep_fong_sourour_trial(g, t, report);
      break;
    }
  }

  const std::size_t free_trials = std::max<std::size_t>(1, trials / 4);
  for (std::size_t u = 0; u < free_trials; ++u) {
    Generator g = sub(trials + u);
    free_trial(theorem, g, trials + u, report);
  }
  return report;
}

// ---------------------------------------------------------------------------
// converse search

namespace {

std::pair<Matrix, Matrix> structured_pair(Generator &g) {
  const std::size_t n = g.config().dim;
  Matrix b0(n, n);
  Matrix n0(n, n);
  if (n == 2) {
    const GaussianRational beta = g.nonzero_scalar();
    b0(0, 0) = beta;
    b0(1, 1) = beta;
    n0(0, 1) = 1;
  } else {
    // diag(beta1, beta2, ..., beta2) with a nilpotent block on the repeated eigenvalue
    const GaussianRational beta1 = g.nonzero_scalar();
    GaussianRational beta2 = g.nonzero_scalar();
    while (beta2 == beta1)
      beta2 = g.nonzero_scalar();
    b0(0, 0) = beta1;
    for (std::size_t i = 1; i < n; ++i)
      b0(i, i) = beta2;
    n0(1, 2) = g.nonzero_scalar();
  }
  auto [s, s_inv] = g.unimodular();
  const Matrix b = s * b0 * s_inv;
  const Matrix nil = s * n0 * s_inv;
  return {b + nil, b};
}

const char *target_name(SearchTarget target) {
  switch (target) {
  case SearchTarget::Thm21Extension:
    return "2.1-ext";
  case SearchTarget::Thm22:
    return "2.2";
  case SearchTarget::Thm23:
    return "2.3";
  }
  return "?";
}

void examine(SearchTarget target, std::size_t t, const std::string &kind, const Matrix &a,
             const Matrix &b, SweepReport &report) {
  ++report.instances_tested;
  const ElementaryOperator v = make_v_operator(a, b);
  TheoremCheckResult r;
  switch (target) {
  case SearchTarget::Thm21Extension: {
    r.conclusion = op_is_nilpotent(v);
    for (std::size_t i = 0; i < v.length(); ++i) {
      const auto &term = v.terms()[i];
      if (!is_nilpotent(term.a).nilpotent && !is_nilpotent(term.b).nilpotent)
        r.hypothesis_failures.push_back("index " + std::to_string(i + 1) + ": neither coefficient nilpotent");
    }
    r.hypotheses_hold = r.hypothesis_failures.empty();
    break;
  }
  case SearchTarget::Thm22:
    r = thm22_check(v.left(), v.right());
    if (r.hypotheses_hold && !r.conclusion.nilpotent)
      report.violations.push_back(dump(t, kind, v.left(), v.right(), "R_{A,B} not nilpotent"));
    break;
  case SearchTarget::Thm23:
    r = thm23_check(a, b);
    if (r.hypotheses_hold && !r.conclusion.nilpotent)
      report.violations.push_back(dump(t, kind, {a}, {b}, "V_{A,B} not nilpotent"));
    break;
  }
  if (r.hypotheses_hold)
    ++report.hypothesis_instances;
  else if (r.conclusion.nilpotent)
    report.converse_failures.push_back(dump(t, kind, {a}, {b}, join_failures(r)));
}

} // namespace

SweepReport search_converse_failures(SearchTarget target, const GeneratorConfig &config,
                                     std::size_t trials, const std::vector<SeedPair> &seeds) {
  if (trials == 0)
    throw PreconditionError("search_converse_failures: trials must be at least 1");
  SweepReport report;
  report.theorem = target_name(target);
  report.mode = "search";
  report.config = config;
  report.trials = trials;

  for (std::size_t i = 0; i < seeds.size(); ++i)
    examine(target, i, "seed:" + seeds[i].label, seeds[i].a, seeds[i].b, report);

  for (std::size_t t = 0; t < trials; ++t) {
    GeneratorConfig c = config;
    c.seed = derive_seed(config.seed, t);
    Generator g(c);
    const std::size_t idx = seeds.size() + t;
    if (t % 2 == 0 && config.dim >= 2) {
      auto [a, b] = structured_pair(g);
      examine(target, idx, "structured", a, b, report);
    } else {
      const Matrix a = g.matrix();
      const Matrix b = g.matrix();
      examine(target, idx, "random", a, b, report);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// worked examples

bool Example31Record::all_hold() const {
  return ab_ne_ba && a_sq_zero && b_sq_zero && aba_eq_a && bab_eq_b && s_cubed_plus_s_zero &&
         v_is_diagonal_swap && v_not_nilpotent;
}

Example31Record example_3_1() {
  Example31Record r;
  r.a = Matrix{{0, 1}, {0, 0}};
  r.b = Matrix{{0, 0}, {1, 0}};
  r.ab = r.a * r.b;
  r.ba = r.b * r.a;
  r.a_sq = r.a * r.a;
  r.b_sq = r.b * r.b;
  r.aba = r.a * r.b * r.a;
  r.bab = r.b * r.a * r.b;
  const ElementaryOperator v = make_v_operator(r.a, r.b);
  r.s = superoperator(v);
  r.s_cubed = r.s * r.s * r.s;
  r.v_nilpotency = op_is_nilpotent(v);

  r.ab_ne_ba = !(r.ab == r.ba);
  r.a_sq_zero = r.a_sq.is_zero();
  r.b_sq_zero = r.b_sq.is_zero();
  r.aba_eq_a = r.aba == r.a;
  r.bab_eq_b = r.bab == r.b;
  r.s_cubed_plus_s_zero = (r.s_cubed + r.s).is_zero();
  r.v_not_nilpotent = !r.v_nilpotency.nilpotent;

  // V(X) = diag(x22, -x11)
  r.v_is_diagonal_swap = true;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Matrix x = Matrix::unit(2, 2, i, j);
      Matrix expected(2, 2);
      expected(0, 0) = x(1, 1);
      expected(1, 1) = -x(0, 0);
      Matrix image = apply(v, x);
      r.v_is_diagonal_swap = r.v_is_diagonal_swap && image == expected;
      r.basis_images.push_back(std::move(image));
    }

  if (!r.all_hold())
    throw IntegrityError("example_3_1: a stated fact does not hold");
  return r;
}

Matrix example_3_2_a(const Example32Params &p) {
  Matrix m(3, 3);
  m(0, 0) = p.a;
  m(0, 1) = p.b;
  m(0, 2) = 1;
  m(1, 0) = p.c;
  m(1, 1) = p.d;
  m(1, 2) = 1;
  m(2, 2) = p.k;
  return m;
}

Matrix example_3_2_b(const Example32Params &p) {
  Matrix m = example_3_2_a(p);
  m(0, 2) = 0;
  m(1, 2) = 0;
  return m;
}

bool Example32Record::all_hold() const {
  return ab_eq_ba && n_nilpotent && v_ab_eq_v_nb && thm22_hypotheses_hold && v_nilpotent &&
         a_not_nilpotent && b_not_nilpotent && no_shift_a && no_shift_b;
}

Example32Record example_3_2(const Example32Params &p) {
  if (!(p.a + p.b == p.k))
    throw PreconditionError("example_3_2: a + b != k");
  if (!(p.c + p.d == p.k))
    throw PreconditionError("example_3_2: c + d != k");
  if (p.k.is_zero())
    throw PreconditionError("example_3_2: k = 0");
  if ((p.b + p.c).is_zero())
    throw PreconditionError("example_3_2: b + c = 0");

  Example32Record r;
  r.params = p;
  r.a = example_3_2_a(p);
  r.b = example_3_2_b(p);
  r.ab = r.a * r.b;
  r.ba = r.b * r.a;
  r.n = r.a - r.b;
  r.char_poly_a = char_poly(r.a);
  r.char_poly_b = char_poly(r.b);
  r.n_nilpotency = is_nilpotent(r.n);
  r.a_nilpotency = is_nilpotent(r.a);
  r.b_nilpotency = is_nilpotent(r.b);
  r.shift_a = scalar_shift_witness(r.a);
  r.shift_b = scalar_shift_witness(r.b);

  const ElementaryOperator v_ab = make_v_operator(r.a, r.b);
  const ElementaryOperator v_nb = make_v_operator(r.n, r.b);
  r.v_nilpotency = op_is_nilpotent(v_ab);
  r.thm22_on_vnb = thm22_check(v_nb.left(), v_nb.right());

  r.ab_eq_ba = r.ab == r.ba;
  r.n_nilpotent = r.n_nilpotency.nilpotent;
  r.v_ab_eq_v_nb = op_equal(v_ab, v_nb);
  r.thm22_hypotheses_hold = r.thm22_on_vnb.hypotheses_hold && r.thm22_on_vnb.conclusion.nilpotent;
  r.v_nilpotent = r.v_nilpotency.nilpotent;
  r.a_not_nilpotent = !r.a_nilpotency.nilpotent;
  r.b_not_nilpotent = !r.b_nilpotency.nilpotent;
  r.no_shift_a = !r.shift_a.lambda.has_value();
  r.no_shift_b = !r.shift_b.lambda.has_value();

  if (!r.all_hold())
    throw IntegrityError("example_3_2: a stated fact does not hold");
  return r;
}

} // namespace elemop
