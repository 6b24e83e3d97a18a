#include "blowup/rank.hpp"

#include <sstream>
#include <stdexcept>

namespace blowup {

namespace {

std::string format_vector(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << v[i];
  }
  os << ")";
  return os.str();
}

template <class T, class Fmt>
std::string join(const std::vector<T>& xs, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? ", " : "") + fmt(xs[i]);
  }
  return out;
}

TauPoly poly_lcm(const TauPoly& a, const TauPoly& b) { return divmod(a * b, gcd(a, b)).first.monic(); }

}  // namespace

std::string RankCertificate::summary() const {
  std::string out = "rank " + std::to_string(rank);
  if (kernel_basis.empty()) {
    return out + ", kernel trivial";
  }
  return out + ", kernel basis " + join(kernel_basis, format_vector);
}

RankCertificate relation_kernel(const std::vector<CircleLoopSpec>& loops, const ManifoldSpec& manifold) {
  if (loops.empty()) {
    throw std::invalid_argument("rank needs at least one loop");
  }
  RankCertificate cert;
  const Rational& a = manifold.period();
  for (const auto& loop : loops) {
    check_loop_matches(loop, manifold);
    cert.names.push_back(loop.name);
    cert.orders.push_back(circle_loop_order(loop, manifold));
    cert.constant_form.push_back(loop.C / a);
    cert.weight_form.push_back(loop.weight_sum());
  }
  RationalVector weights;
  for (const auto& k : cert.weight_form) {
    weights.emplace_back(k);
  }
  const std::size_t k = loops.size();
  cert.kernel_basis = integer_kernel(std::vector<RationalVector>{cert.constant_form, weights}, k);
  cert.rank = k - cert.kernel_basis.size();
  cert.orders_pairwise_coprime = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (gcd(cert.orders[i], cert.orders[j]) != 1) {
        cert.orders_pairwise_coprime = false;
      }
    }
  }
  return cert;
}

std::vector<IntVector> relation_lattice(const std::vector<TauRat>& values, const PeriodLattice& lattice) {
  const std::size_t k = values.size();
  TauPoly common(Rational(1));
  for (const auto& x : values) {
    common = poly_lcm(common, x.den());
  }
  std::vector<TauPoly> scaled;
  scaled.reserve(k);
  int top = common.degree() + 1;
  for (const auto& x : values) {
    scaled.push_back(x.num() * divmod(common, x.den()).first);
    top = std::max(top, scaled.back().degree());
  }
  const Rational& a = lattice.generator();
  const bool with_tau = lattice.includes_tau();
  // Unknowns (c_1..c_k, A[, B]): sum c_j P_j - A a D - B tau D = 0.
  std::vector<RationalVector> rows;
  for (int i = 0; i <= top; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    RationalVector row;
    for (const auto& p : scaled) {
      row.push_back(p.coeff(ui));
    }
    row.push_back(-a * common.coeff(ui));
    if (with_tau) {
      row.push_back(i == 0 ? Rational(0) : Rational(-common.coeff(ui - 1)));
    }
    rows.push_back(std::move(row));
  }
  const auto kernel = integer_kernel(rows, k + (with_tau ? 2 : 1));
  std::vector<std::size_t> keep(k);
  for (std::size_t j = 0; j < k; ++j) {
    keep[j] = j;
  }
  return project_lattice(kernel, keep);
}

RankCertificate certify_rank(const std::vector<CircleLoopSpec>& loops, const ManifoldSpec& manifold) {
  RankCertificate cert = relation_kernel(loops, manifold);
  std::vector<TauRat> lifted;
  cert.generators_infinite_order = true;
  for (const auto& loop : loops) {
    const WeinsteinValue w = lift_value_circle(loop, manifold);
    if (!class_order(w.lifted_class()).is_infinite()) {
      cert.generators_infinite_order = false;
    }
    lifted.push_back(w.lifted_value);
  }
  cert.matches_direct_computation =
      relation_lattice(lifted, blowup_lattice(PeriodLattice::make(manifold.period()))) == cert.kernel_basis;

  auto yes_no = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  std::ostringstream os;
  os << "rank certificate\n";
  os << "  manifold: n=" << manifold.n() << " V=" << format_rational(manifold.volume())
     << " a=" << format_rational(manifold.period()) << "\n";
  os << "  lattice: " << blowup_lattice(PeriodLattice::make(manifold.period())).describe()
     << "  (t = pi*rho^2, formal)\n";
  for (std::size_t j = 0; j < cert.k(); ++j) {
    os << "  loop[" << j << "] " << cert.names[j] << ": n_j=" << cert.orders[j] << " K_j=" << cert.weight_form[j]
       << " C_j=" << format_rational(loops[j].C) << "\n";
  }
  os << "  form C_j/a: (" << join(cert.constant_form, format_rational) << ")\n";
  os << "  form K_j:   (" << join(cert.weight_form, [](const BigInt& x) { return x.str(); }) << ")\n";
  os << "  kernel basis: "
     << (cert.kernel_basis.empty() ? std::string("none (trivial kernel)") : join(cert.kernel_basis, format_vector))
     << "\n";
  os << "  rank " << cert.rank << " of " << cert.k() << "\n";
  os << "  orders pairwise coprime: " << yes_no(cert.orders_pairwise_coprime) << "\n";
  os << "  every generator of infinite order: " << yes_no(cert.generators_infinite_order) << "\n";
  os << "  direct relation lattice agrees: " << yes_no(cert.matches_direct_computation) << "\n";
  if (!cert.orders_pairwise_coprime) {
    os << "  note: orders are not pairwise coprime; the rank-k hypothesis does not apply\n";
  } else if (cert.deficient_under_coprime_orders()) {
    os << "  flag: orders are pairwise coprime but rank < k; the relations above are not of the\n"
          "        unit-coefficient form excluded by the coprimality lemma\n";
  }
  os << "  " << cert.summary() << "\n";
  cert.report = os.str();
  return cert;
}

Rational lemma_num_check(const std::vector<BigInt>& n_list, const std::vector<BigInt>& alpha) {
  if (n_list.empty() || n_list[0] < 2 || alpha.size() + 1 != n_list.size()) {
    throw std::invalid_argument("hypothesis violated");
  }
  for (std::size_t j = 1; j < n_list.size(); ++j) {
    if (n_list[j] < 1 || gcd(n_list[0], n_list[j]) != 1) {
      throw std::invalid_argument("hypothesis violated");
    }
  }
  Rational value = Rational(1) / Rational(n_list[0]);
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    value -= Rational(alpha[j]) / Rational(n_list[j + 1]);
  }
  if (value == 0) {
    throw std::logic_error("lemma_num_check: value vanished under coprime orders");
  }
  return value;
}

}  // namespace blowup
