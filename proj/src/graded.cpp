#include "conelab/graded.hpp"

#include "conelab/linalg.hpp"

namespace conelab {

// ---------------------------------------------------------------------------
// MonomialBasis

namespace {

void enumerate(int var, int num_vars, int remaining, Exponent& e, std::vector<Exponent>& out) {
  if (var == num_vars - 1) {
    e[static_cast<std::size_t>(var)] = remaining;
    out.push_back(e);
    e[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    e[static_cast<std::size_t>(var)] = k;
    enumerate(var + 1, num_vars, remaining - k, e, out);
  }
  e[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 1 || num_vars > 4)
    throw Error(ErrorKind::InvalidArgument, "monomial bases support 1 to 4 variables");
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  Exponent e{};
  enumerate(0, num_vars, degree, e, exponents_);
  for (std::size_t i = 0; i < exponents_.size(); ++i) lookup_.emplace(exponents_[i], static_cast<Index>(i));
}

Index MonomialBasis::index_of(const Exponent& e) const {
  const auto it = lookup_.find(e);
  return it == lookup_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// Form

Form::Form(MonomialBasis basis, VectorQ coefficients)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != basis_.size())
    throw Error(ErrorKind::InvalidArgument, "coefficient count does not match the basis");
}

Form Form::zero(int num_vars, int degree) {
  MonomialBasis basis(num_vars, degree);
  const Index n = basis.size();
  return Form(std::move(basis), VectorQ::Zero(n));
}

Rational Form::coefficient(const Exponent& e) const {
  const Index i = basis_.index_of(e);
  return i < 0 ? Rational(0) : coefficients_(i);
}

Rational Form::operator()(const ProjPoint& p) const { return evaluate(p.rational()); }

Rational Form::evaluate(const VectorQ& p) const {
  return derivative_row(basis_, Exponent{}, p).dot(coefficients_);
}

Form Form::derivative(int var) const {
  if (degree() == 0) return zero(num_vars(), 0);
  Form out = zero(num_vars(), degree() - 1);
  for (Index i = 0; i < basis_.size(); ++i) {
    Exponent e = basis_[i];
    const int power = e[static_cast<std::size_t>(var)];
    if (power == 0 || coefficients_(i) == 0) continue;
    e[static_cast<std::size_t>(var)] -= 1;
    out.coefficients_(out.basis_.index_of(e)) += coefficients_(i) * power;
  }
  return out;
}

Form Form::operator*(const Form& other) const {
  if (num_vars() != other.num_vars()) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
  Form out = zero(num_vars(), degree() + other.degree());
  for (Index i = 0; i < basis_.size(); ++i) {
    if (coefficients_(i) == 0) continue;
    for (Index j = 0; j < other.basis_.size(); ++j) {
      if (other.coefficients_(j) == 0) continue;
      Exponent e{};
      for (std::size_t v = 0; v < 4; ++v) e[v] = basis_[i][v] + other.basis_[j][v];
      out.coefficients_(out.basis_.index_of(e)) += coefficients_(i) * other.coefficients_(j);
    }
  }
  return out;
}

Form Form::operator+(const Form& other) const {
  if (!(basis_ == other.basis_)) throw Error(ErrorKind::InvalidArgument, "adding forms of different shape");
  return Form(basis_, coefficients_ + other.coefficients_);
}

Form Form::operator-(const Form& other) const {
  if (!(basis_ == other.basis_)) throw Error(ErrorKind::InvalidArgument, "subtracting forms of different shape");
  return Form(basis_, coefficients_ - other.coefficients_);
}

Form Form::operator*(const Rational& s) const { return Form(basis_, coefficients_ * s); }

Form make_form(int num_vars, int degree, const std::vector<std::pair<Rational, Exponent>>& terms) {
  Form f = Form::zero(num_vars, degree);
  VectorQ c = f.coefficients();
  for (const auto& [coef, e] : terms) {
    const Index i = f.basis().index_of(e);
    if (i < 0) throw Error(ErrorKind::InvalidArgument, "term does not have the form's degree");
    c(i) += coef;
  }
  return Form(f.basis(), std::move(c));
}

// ---------------------------------------------------------------------------
// Condition matrices

VectorQ derivative_row(const MonomialBasis& basis, const Exponent& alpha, const VectorQ& p) {
  const int n = basis.num_vars();
  const int d = basis.degree();
  // powers[v][k] = p_v^k
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& pw = powers[static_cast<std::size_t>(v)];
    pw.resize(static_cast<std::size_t>(d) + 1);
    pw[0] = 1;
    for (int k = 1; k <= d; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k) - 1] * p(v);
  }
  VectorQ row(basis.size());
  for (Index c = 0; c < basis.size(); ++c) {
    const Exponent& e = basis[c];
    Rational value = 1;
    for (int v = 0; v < n && value != 0; ++v) {
      const int ev = e[static_cast<std::size_t>(v)];
      const int av = alpha[static_cast<std::size_t>(v)];
      if (ev < av) {
        value = 0;
        break;
      }
      for (int k = 0; k < av; ++k) value *= ev - k;
      value *= powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(ev - av)];
    }
    row(c) = value;
  }
  return row;
}

MatrixQ condition_matrix(const PointConfig& cfg, int d, const std::optional<FatPoint>& fat) {
  const int n = cfg.ambient_dim() + 1;
  const MonomialBasis basis(n, d);
  std::vector<Exponent> orders;
  if (fat) {
    if (fat->multiplicity < 0 || fat->multiplicity > d + 1)
      throw Error(ErrorKind::InvalidArgument, "fat point multiplicity must lie in [0, d+1]");
    if (fat->point.size() != n) throw Error(ErrorKind::InvalidArgument, "fat point has the wrong dimension");
    if (cfg.contains(fat->point)) throw Error(ErrorKind::InvalidArgument, "fat point lies in the configuration");
    // Order m-1 suffices: by Euler's relation they force every lower order.
    if (fat->multiplicity > 0) orders = MonomialBasis(n, fat->multiplicity - 1).exponents();
  }
  MatrixQ m(static_cast<Index>(cfg.size() + orders.size()), basis.size());
  Index r = 0;
  for (const ProjPoint& p : cfg.points()) m.row(r++) = derivative_row(basis, Exponent{}, p.rational()).transpose();
  if (fat) {
    const VectorQ p = fat->point.rational();
    for (const Exponent& alpha : orders) m.row(r++) = derivative_row(basis, alpha, p).transpose();
  }
  return m;
}

Index ideal_dim(const PointConfig& cfg, int d) {
  const Index total = binomial_small(d + cfg.ambient_dim(), cfg.ambient_dim());
  if (cfg.empty()) return total;
  return total - rank(condition_matrix(cfg, d));
}

Index fat_ideal_dim(const PointConfig& cfg, const ProjPoint& p, int m, int d) {
  const MatrixQ cm = condition_matrix(cfg, d, FatPoint{p, m});
  if (cm.rows() == 0) return cm.cols();
  return cm.cols() - rank(cm);
}

Index fat_ideal_dim_at_vertex(const PointConfig& cfg, const ProjPoint& p, int m, int d) {
  const int n = cfg.ambient_dim() + 1;
  if (p.size() != n) throw Error(ErrorKind::InvalidArgument, "fat point has the wrong dimension");
  if (m < 0 || m > d + 1) throw Error(ErrorKind::InvalidArgument, "fat point multiplicity must lie in [0, d+1]");
  if (cfg.contains(p)) throw Error(ErrorKind::InvalidArgument, "fat point lies in the configuration");
  Index lead = 0;
  while (p[lead] == 0) ++lead;
  // New coordinates: y0 = x_lead, and p_lead*x_i - p_i*x_lead for i != lead,
  // listed in increasing i. P becomes [p_lead, 0, ..., 0].
  auto transformed = [&](const ProjPoint& z) {
    VectorQ y(n);
    y(0) = Rational(z[lead]);
    Index k = 1;
    for (Index i = 0; i < n; ++i)
      if (i != lead) y(k++) = Rational(p[lead] * z[i] - p[i] * z[lead]);
    return y;
  };
  const MonomialBasis basis(n, d);
  std::vector<Index> columns;
  for (Index c = 0; c < basis.size(); ++c)
    if (basis[c][0] <= d - m) columns.push_back(c);
  if (columns.empty()) return 0;
  if (cfg.empty()) return static_cast<Index>(columns.size());
  MatrixQ cm(static_cast<Index>(cfg.size()), static_cast<Index>(columns.size()));
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const VectorQ row = derivative_row(basis, Exponent{}, transformed(cfg[i]));
    for (std::size_t j = 0; j < columns.size(); ++j) cm(static_cast<Index>(i), static_cast<Index>(j)) = row(columns[j]);
  }
  return cm.cols() - rank(cm);
}

Index hilbert_function(const PointConfig& cfg, int t) {
  if (t < 0 || cfg.empty()) return 0;
  return rank(condition_matrix(cfg, t));
}

HVector h_vector(const PointConfig& cfg) {
  HVector h;
  const Index n = static_cast<Index>(cfg.size());
  Index previous = 0;
  for (int t = 0; previous < n; ++t) {
    const Index value = hilbert_function(cfg, t);
    h.push_back(value - previous);
    previous = value;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Complete intersections

MatrixQ ideal_piece(const Form& f, const Form& g, int t) {
  const int n = f.num_vars();
  const MonomialBasis target(n, t);
  std::vector<VectorQ> rows;
  for (const Form* form : {&f, &g}) {
    const int shift = t - form->degree();
    if (shift < 0) continue;
    const MonomialBasis multipliers(n, shift);
    for (const Exponent& m : multipliers.exponents()) {
      VectorQ row = VectorQ::Zero(target.size());
      for (Index i = 0; i < form->basis().size(); ++i) {
        if (form->coefficients()(i) == 0) continue;
        Exponent e{};
        for (std::size_t v = 0; v < 4; ++v) e[v] = form->basis()[i][v] + m[v];
        row(target.index_of(e)) = form->coefficients()(i);
      }
      rows.push_back(std::move(row));
    }
  }
  MatrixQ out(static_cast<Index>(rows.size()), target.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = rows[i].transpose();
  return out;
}

bool validate_ci_certificate(const PointConfig& cfg, const Form& f, const Form& g) {
  if (cfg.ambient_dim() != 2 || f.num_vars() != 3 || g.num_vars() != 3) return false;
  if (f.is_zero() || g.is_zero()) return false;
  const int a = f.degree();
  const int b = g.degree();
  const long ab = static_cast<long>(a) * b;
  if (static_cast<long>(cfg.size()) != ab) return false;
  for (const ProjPoint& p : cfg.points())
    if (f(p) != 0 || g(p) != 0) return false;
  for (int t : {a + b - 2, a + b - 1}) {
    if (t < 0) continue;
    const MatrixQ piece = ideal_piece(f, g, t);
    const Index span = piece.rows() == 0 ? 0 : rank(piece);
    if (binomial_small(t + 2, 2) - span != ab) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kCITag = 0x43492d63657274ULL;

Form random_member(const std::vector<VectorQ>& kernel, const MonomialBasis& basis, Rng& rng,
                   std::uint64_t height) {
  VectorQ c = VectorQ::Zero(basis.size());
  do {
    c.setZero();
    for (const VectorQ& v : kernel) c += sample_rational(rng, height) * v;
  } while (c.isZero());
  return Form(basis, std::move(c));
}

}  // namespace

CIVerdict is_complete_intersection(const PointConfig& cfg, int a, int b, const GenericityProtocol& protocol) {
  if (cfg.ambient_dim() != 2)
    throw Error(ErrorKind::InvalidArgument, "complete intersection test needs a planar configuration");
  if (a < 1 || a > b) throw Error(ErrorKind::InvalidArgument, "type must satisfy 1 <= a <= b");
  if (static_cast<long>(cfg.size()) != static_cast<long>(a) * b)
    throw Error(ErrorKind::DimensionMismatch, std::to_string(cfg.size()) + " points cannot form a CI of type (" +
                                                  std::to_string(a) + "," + std::to_string(b) + ")");
  const auto kernel_a = kernel_basis(condition_matrix(cfg, a));
  if (kernel_a.empty())
    throw Error(ErrorKind::NoFormAvailable, "no curve of degree " + std::to_string(a) + " through the points");
  const auto kernel_b = a == b ? kernel_a : kernel_basis(condition_matrix(cfg, b));

  const MonomialBasis basis_a(3, a);
  const MonomialBasis basis_b(3, b);
  CIVerdict verdict;
  verdict.type = {a, b};
  const Rng root(protocol.seed);
  for (int trial = 0; trial < protocol.trials; ++trial) {
    Rng rng = root.fork(kCITag, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                        static_cast<std::uint64_t>(trial));
    Form f = random_member(kernel_a, basis_a, rng, protocol.height);
    Form g = random_member(kernel_b, basis_b, rng, protocol.height);
    verdict.trials_used = trial + 1;
    if (validate_ci_certificate(cfg, f, g)) {
      verdict.certified = true;
      verdict.certificate = std::make_pair(std::move(f), std::move(g));
      return verdict;
    }
  }
  return verdict;
}

CIVerdict residual_ci_check(const PointConfig& cfg, const std::vector<std::size_t>& subset_indices, int a,
                            int b, int c, const GenericityProtocol& protocol) {
  if (static_cast<long>(subset_indices.size()) != static_cast<long>(a) * c)
    throw Error(ErrorKind::DimensionMismatch, "removed subset does not have a*c points");
  if (b - c < 1) throw Error(ErrorKind::DimensionMismatch, "residual type (a, b-c) is empty");
  const PointConfig rest = cfg.without(subset_indices, cfg.label().empty() ? "" : cfg.label() + "-residual");
  return is_complete_intersection(rest, std::min(a, b - c), std::max(a, b - c), protocol);
}

int multiplicity_at(const Form& f, const ProjPoint& p) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroForm, "multiplicity of the zero form");
  if (p.size() != f.num_vars()) throw Error(ErrorKind::InvalidArgument, "point has the wrong dimension");
  const VectorQ q = p.rational();
  for (int k = 0; k <= f.degree(); ++k) {
    const MonomialBasis orders(f.num_vars(), k);
    for (const Exponent& alpha : orders.exponents())
      if (derivative_row(f.basis(), alpha, q).dot(f.coefficients()) != 0) return k;
  }
  return f.degree() + 1;  // unreachable for a nonzero form
}

}  // namespace conelab
