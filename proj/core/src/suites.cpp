#include "exc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "exc/groups.hpp"
#include "exc/linalg_exact.hpp"
#include "exc/linalg_float.hpp"
#include "exc/orbits.hpp"

namespace exc {

namespace {

// ------------------------------------------------------------ primitives

struct Outcome {
    bool pass = false;
    std::string measured, expected;
    double tolerance = 0.0;
};

struct Check {
    std::string id, description, paper_ref, backend;  // backend: exact | float
    std::function<Outcome(const SuiteConfig&)> run;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

Outcome residual_outcome(double resid, double tol) {
    return Outcome{resid <= tol, fmt(resid), "<= " + fmt(tol), tol};
}

Outcome bool_outcome(bool pass, const std::string& measured, const std::string& expected) {
    return Outcome{pass, measured, expected, 0.0};
}

Outcome count_outcome(std::size_t got, std::size_t want) {
    return Outcome{got == want, std::to_string(got), std::to_string(want), 0.0};
}

bool vec_is_zero(const std::vector<Rat>& v) {
    for (const Rat& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

// ------------------------------------------------------- shared objects

const MatQ& sigma27() {
    static const MatQ m = sigma_op(Basis::J27).mat;
    return m;
}
const MatQ& gamma27() {
    static const MatQ m = gamma_op(Basis::J27).mat;
    return m;
}
const MatQ& sigma54() {
    static const MatQ m = sigma_op(Basis::JC54).mat;
    return m;
}
const MatQ& gamma54() {
    static const MatQ m = gamma_op(Basis::JC54).mat;
    return m;
}
const MatQ& sigma112() {
    static const MatQ m = sigma_op(Basis::PC112).mat;
    return m;
}
const MatQ& gamma112() {
    static const MatQ m = gamma_op(Basis::PC112).mat;
    return m;
}

const SubalgebraBasis& fixed16() {
    static const SubalgebraBasis b = fixed_subalgebra(f4_algebra(), {sigma27(), gamma27()});
    return b;
}
const SubalgebraBasis& fixed22() {
    static const SubalgebraBasis b = fixed_subalgebra(e6_algebra(), {sigma54(), gamma54()});
    return b;
}
const SubalgebraBasis& fixed37() {
    static const SubalgebraBasis b = fixed_subalgebra(e7_algebra(), {sigma112(), gamma112()});
    return b;
}

// structure invariants are needed by several checks; memoize per seed+algebra
StructureInvariants cached_invariants(const SubalgebraBasis& b, const std::string& label,
                                      const SuiteConfig& cfg) {
    static std::map<std::pair<std::uint64_t, std::string>, StructureInvariants> cache;
    static std::mutex mtx;
    std::pair<std::uint64_t, std::string> key{cfg.seed, label};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Rng rng = Rng::derive(cfg.seed, "invariants." + label);
    StructureInvariants inv = structure_invariants(b, rng);
    std::lock_guard<std::mutex> lock(mtx);
    cache[key] = inv;
    return inv;
}

std::vector<std::vector<Rat>> op_vecs(const std::vector<MatQ>& ops) {
    std::vector<std::vector<Rat>> v;
    v.reserve(ops.size());
    for (const MatQ& m : ops) v.push_back(mat_to_vec(m));
    return v;
}

// exact stabilizer targets on P^C
std::vector<std::vector<Rat>> family_killed_points(FamilyId id) {
    std::vector<std::vector<Rat>> pts;
    auto fdot = [&](std::size_t oct_coord) {
        Oct<CRat> h;
        h.coord(oct_coord) = CRat(Rat(1));
        return coords(fdot1(h));
    };
    if (id == FamilyId::L3_2) {
        for (std::size_t b = 0; b < 4; ++b) pts.push_back(fdot(b));  // F1(h), h in H
        pts.push_back(coords(e1_tilde<CRat>()));
        pts.push_back(coords(em1_tilde<CRat>()));
        pts.push_back(coords(edot23<CRat>()));
        return pts;
    }
    if (id == FamilyId::L3_18 || id == FamilyId::L3_20) return pts;  // no stabilized points
    for (std::size_t b = 4; b < 8; ++b) pts.push_back(fdot(b));      // F1(h e4)
    if (id == FamilyId::L3_6) {
        pts.push_back(coords(e1_tilde<CRat>()));
        pts.push_back(coords(em1_tilde<CRat>()));
    } else if (id == FamilyId::L3_10) {
        pts.push_back(coords(e1_tilde<CRat>()));
    }
    return pts;
}

// ------------------------------------------------------------- f4 suite

std::vector<Check> suite_f4() {
    std::vector<Check> cs;

    cs.push_back({"f4.involutions_j", "sigma^2 = gamma^2 = id and sigma gamma = gamma sigma on J",
                  "§1", "exact", [](const SuiteConfig&) {
                      const MatQ &s = sigma27(), &g = gamma27();
                      MatQ id = MatQ::identity(27);
                      bool ok = s * s == id && g * g == id && s * g == g * s;
                      return bool_outcome(ok, ok ? "all exact" : "violated", "exact identities");
                  }});

    cs.push_back({"f4.sigma_gamma_membership", "sigma and gamma preserve the Jordan product",
                  "§1", "exact", [](const SuiteConfig&) {
                      bool ok = is_f4_exact(sigma27()) && is_f4_exact(gamma27());
                      return bool_outcome(ok, ok ? "zero residual" : "violated", "exact F4 members");
                  }});

    cs.push_back({"f4.scaling_not_member", "2 id breaks the quadratic F4 identity", "§1", "float",
                  [](const SuiteConfig& cfg) {
                      MatD two = MatD::identity(27);
                      for (auto& x : two.data()) x *= 2.0;
                      bool ok = is_f4(MatD::identity(27), cfg.tol) && !is_f4(two, cfg.tol);
                      return bool_outcome(ok, ok ? "id in, 2id out" : "violated", "id in, 2id out");
                  }});

    cs.push_back({"f4.der_dimension", "dim Der(J) from the exact nullspace oracle", "§1", "exact",
                  [](const SuiteConfig&) { return count_outcome(f4_basis().size(), 52); }});

    cs.push_back({"f4.der_kills_unit", "every derivation annihilates E", "§1", "exact",
                  [](const SuiteConfig&) {
                      std::vector<Rat> e = coords(JordanQ::E());
                      for (const MatQ& d : f4_basis())
                          if (!vec_is_zero(d.apply(e))) return bool_outcome(false, "D E != 0", "0");
                      return bool_outcome(true, "0", "0");
                  }});

    cs.push_back({"f4.der_closure", "sampled commutators stay in Der(J)", "§1", "exact",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "f4.der_closure");
                      SubalgebraBasis b = f4_algebra();
                      bool ok = bracket_closed(b, 200, rng);
                      return bool_outcome(ok, ok ? "closed" : "escaped", "closed");
                  }});

    cs.push_back({"f4.modular_rank", "multi-prime modular rank of the derivation system agrees",
                  "§1", "exact", [](const SuiteConfig&) {
                      auto rows = f4_constraint_rows();
                      std::size_t exact = 729 - f4_basis().size();
                      auto mod = sparse_modular_rank(rows, 729, kDefaultPrimes);
                      bool ok = mod.value == exact && !mod.exact_fallback &&
                                mod.per_prime.size() >= 2;
                      return bool_outcome(ok,
                                          "mod " + std::to_string(mod.value) + " over " +
                                              std::to_string(mod.per_prime.size()) + " primes",
                                          "exact " + std::to_string(exact));
                  }});

    cs.push_back({"f4.fixed_dim", "dim of the sigma,gamma fixed subalgebra of f4",
                  "Theorem 1.3", "exact",
                  [](const SuiteConfig&) { return count_outcome(fixed16().dim(), 16); }});

    cs.push_back({"f4.phi_sigma", "phi(-1, I1) equals sigma exactly", "Lemma 1.2", "exact",
                  [](const SuiteConfig&) {
                      QMatQ i1 = QMatQ::identity(3);
                      i1(0, 0) = Quat<Rat>(Rat(-1));
                      bool ok = phi_f4_gamma_exact(Quat<Rat>(Rat(-1)), i1) == sigma27();
                      return bool_outcome(ok, ok ? "equal" : "different", "sigma");
                  }});

    cs.push_back({"f4.phi_identity", "phi(1, E) is the identity", "Prop 1.1", "exact",
                  [](const SuiteConfig&) {
                      bool ok = phi_f4_gamma_exact(Quat<Rat>(Rat(1)), QMatQ::identity(3)) ==
                                MatQ::identity(27);
                      return bool_outcome(ok, ok ? "identity" : "different", "identity");
                  }});

    cs.push_back({"f4.phi_homomorphism", "phi(p1,A1) phi(p2,A2) = phi(p1 p2, A1 A2)", "Prop 1.1",
                  "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "f4.phi_homomorphism");
                      using G = std::pair<Quat<double>, QMatF>;
                      auto rep = verify_homomorphism<G>(
                          [](const G& g) { return phi_f4_gamma(g.first, g.second); },
                          [](Rng& r) { return G{sample_sp1(r), sample_spn(3, r)}; },
                          [](const G& a, const G& b) {
                              return G{a.first * b.first, a.second * b.second};
                          },
                          cfg.samples, 1e-12, rng);
                      return residual_outcome(rep.max_residual, 1e-12);
                  }});

    cs.push_back({"f4.phi_lands_in_f4_gamma", "phi(p, A) is in F4 and commutes with gamma",
                  "Prop 1.1", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "f4.phi_lands");
                      MatD g = to_float(gamma27());
                      double worst = 0.0;
                      for (int s = 0; s < 10; ++s) {
                          MatD m = phi_f4_gamma(sample_sp1(rng), sample_spn(3, rng));
                          worst = std::max(worst, f4_residual(m));
                          worst = std::max(worst, inf_norm(m * g - g * m));
                      }
                      return residual_outcome(worst, cfg.tol);
                  }});

    cs.push_back({"f4.phi4_kernel", "Ker phi4 = {(1,1,E), (-1,-1,-E)}", "Theorem 1.3", "exact",
                  [](const SuiteConfig& cfg) {
                      QMatQ e = QMatQ::identity(2), me = QMatQ::identity(2);
                      for (auto& q : me.a) q = -q;
                      bool kernel_ok =
                          phi4_exact(Quat<Rat>(Rat(1)), Quat<Rat>(Rat(1)), e) == MatQ::identity(27) &&
                          phi4_exact(Quat<Rat>(Rat(-1)), Quat<Rat>(Rat(-1)), me) == MatQ::identity(27);
                      // sampled non-kernel elements stay away from the identity
                      Rng rng = Rng::derive(cfg.seed, "f4.phi4_kernel");
                      double min_dist = 1e300;
                      for (std::size_t s = 0; s < cfg.samples; ++s) {
                          MatD m = phi4(sample_sp1(rng), sample_sp1(rng), sample_spn(2, rng));
                          min_dist = std::min(min_dist, inf_norm(m - MatD::identity(27)));
                      }
                      bool ok = kernel_ok && min_dist > 1e-6;
                      return bool_outcome(ok,
                                          kernel_ok ? "kernel -> id, nonkernel min dist " + fmt(min_dist)
                                                    : "kernel violated",
                                          "id exactly, others far");
                  }});

    cs.push_back({"f4.phi4_homomorphism", "phi4 is a homomorphism", "Theorem 1.3", "float",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "f4.phi4_homomorphism");
                      using G = std::tuple<Quat<double>, Quat<double>, QMatF>;
                      auto rep = verify_homomorphism<G>(
                          [](const G& g) {
                              return phi4(std::get<0>(g), std::get<1>(g), std::get<2>(g));
                          },
                          [](Rng& r) {
                              return G{sample_sp1(r), sample_sp1(r), sample_spn(2, r)};
                          },
                          [](const G& a, const G& b) {
                              return G{std::get<0>(a) * std::get<0>(b),
                                       std::get<1>(a) * std::get<1>(b),
                                       std::get<2>(a) * std::get<2>(b)};
                          },
                          cfg.samples, 1e-12, rng);
                      return residual_outcome(rep.max_residual, 1e-12);
                  }});

    cs.push_back({"f4.phi4_sigma_restriction", "sigma phi4 sigma = phi4", "Lemma 1.2", "float",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "f4.phi4_sigma");
                      MatD s = to_float(sigma27());
                      double worst = 0.0;
                      for (int k = 0; k < 10; ++k) {
                          MatD m = phi4(sample_sp1(rng), sample_sp1(rng), sample_spn(2, rng));
                          worst = std::max(worst, inf_norm(s * m * s - m));
                      }
                      return residual_outcome(worst, 1e-12);
                  }});

    cs.push_back({"f4.phi4_sign_pair", "phi4(p,q,B) = phi4(-p,-q,-B) as operators",
                  "Prop 3.1", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "f4.phi4_sign");
                      double worst = 0.0;
                      for (int k = 0; k < 10; ++k) {
                          Quat<double> p = sample_sp1(rng), q = sample_sp1(rng);
                          QMatF b = sample_spn(2, rng), mb = b;
                          for (auto& x : mb.a) x = -x;
                          worst = std::max(worst, inf_norm(phi4(p, q, b) - phi4(-p, -q, mb)));
                      }
                      return residual_outcome(worst, 1e-13);
                  }});

    cs.push_back({"f4.stab_b_solve", "B S_h = S_h B over the quaternion basis forces B = +-E",
                  "Prop 3.1", "exact", [](const SuiteConfig&) {
                      StabilizerSolve s = prop31_b_solve();
                      return bool_outcome(s.solution_dim == 1 && s.expected_line,
                                          "dim " + std::to_string(s.solution_dim) +
                                              (s.expected_line ? ", line R E" : ", wrong line"),
                                          "dim 1, line R E");
                  }});

    cs.push_back({"f4.stab_pq_solve", "p h = h q for all h forces (p,q) in R(1,1)",
                  "Prop 3.4", "exact", [](const SuiteConfig&) {
                      StabilizerSolve s = prop34_pq_solve();
                      return bool_outcome(s.solution_dim == 1 && s.expected_line,
                                          "dim " + std::to_string(s.solution_dim) +
                                              (s.expected_line ? ", line R(1,1)" : ", wrong line"),
                                          "dim 1, line R(1,1)");
                  }});

    cs.push_back({"f4.stab_constructive", "phi4(p,q,E) fixes F1(h); phi4(1,1,B) fixes F1(h e4)",
                  "Prop 3.4", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "f4.stab_constructive");
                      double worst = 0.0;
                      for (int rep = 0; rep < 5; ++rep) {
                          MatD m = phi4(sample_sp1(rng), sample_sp1(rng), QMatF::identity(2));
                          for (std::size_t bcoord = 0; bcoord < 4; ++bcoord) {
                              std::vector<double> v(27, 0.0);
                              v[3 + bcoord] = 1.0;  // F1(h), h in H
                              std::vector<double> w = m.apply(v);
                              for (std::size_t t = 0; t < 27; ++t)
                                  worst = std::max(worst, std::fabs(w[t] - v[t]));
                          }
                          MatD m2 = phi4(Quat<double>(1.0), Quat<double>(1.0), sample_spn(2, rng));
                          for (std::size_t bcoord = 4; bcoord < 8; ++bcoord) {
                              std::vector<double> v(27, 0.0);
                              v[3 + bcoord] = 1.0;  // F1(h e4)
                              std::vector<double> w = m2.apply(v);
                              for (std::size_t t = 0; t < 27; ++t)
                                  worst = std::max(worst, std::fabs(w[t] - v[t]));
                          }
                      }
                      return residual_outcome(worst, 1e-12);
                  }});

    return cs;
}

// ------------------------------------------------------------- e6 suite

std::vector<Check> suite_e6() {
    std::vector<Check> cs;

    cs.push_back({"e6.involutions_jc", "sigma, gamma, tau involutions and commutation on J^C",
                  "§2", "exact", [](const SuiteConfig&) {
                      const MatQ &s = sigma54(), &g = gamma54();
                      MatQ t = tau_op(Basis::JC54).mat;
                      MatQ id = MatQ::identity(54);
                      bool ok = s * s == id && g * g == id && t * t == id && s * g == g * s &&
                                s * t == t * s && g * t == t * g;
                      return bool_outcome(ok, ok ? "all exact" : "violated", "exact identities");
                  }});

    cs.push_back({"e6.gamma_member", "gamma passes the E6 membership test", "§2", "float",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e6.gamma_member");
                      return residual_outcome(e6_residual(to_float(gamma54()), 20, rng), cfg.tol);
                  }});

    cs.push_back({"e6.dim", "dim e6 = 78 = 52 + 26 by the exact rank oracle", "§2", "exact",
                  [](const SuiteConfig&) {
                      return count_outcome(rank_of_rows(op_vecs(e6_basis())), 78);
                  }});

    cs.push_back({"e6.closure", "sampled commutators stay in e6", "§2", "exact",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e6.closure");
                      bool ok = bracket_closed(e6_algebra(), 200, rng);
                      return bool_outcome(ok, ok ? "closed" : "escaped", "closed");
                  }});

    cs.push_back({"e6.fixed_dim", "dim of the sigma,gamma fixed subalgebra of e6",
                  "Theorem 2.3", "exact",
                  [](const SuiteConfig&) { return count_outcome(fixed22().dim(), 22); }});

    cs.push_back({"e6.kj_sigma", "phi6(-1, I2) equals sigma exactly", "Lemma 2.2", "exact",
                  [](const SuiteConfig&) {
                      bool ok = calibration().kj_sigma_ok;
                      return bool_outcome(ok, ok ? "equal" : "different", "sigma");
                  }});

    cs.push_back({"e6.phi6_identity", "phi6(1, E) is the identity", "Prop 2.1", "exact",
                  [](const SuiteConfig&) {
                      bool ok = phi6_exact(Quat<Rat>(Rat(1)), Mat<CRat>::identity(6)) ==
                                MatQ::identity(54);
                      return bool_outcome(ok, ok ? "identity" : "different", "identity");
                  }});

    cs.push_back({"e6.phi6_membership", "phi6(p, A) passes the E6 membership test", "Prop 2.1",
                  "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e6.phi6_membership");
                      double worst = 0.0;
                      for (int s = 0; s < 5; ++s) {
                          MatD m = phi6(sample_sp1(rng), sample_sun(6, rng));
                          worst = std::max(worst, e6_residual(m, 10, rng));
                      }
                      return residual_outcome(worst, cfg.tol);
                  }});

    cs.push_back({"e6.phi6_homomorphism", "phi6 is a homomorphism", "Theorem 2.3", "float",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e6.phi6_homomorphism");
                      using G = std::pair<Quat<double>, Mat<CF>>;
                      auto rep = verify_homomorphism<G>(
                          [](const G& g) { return phi6(g.first, g.second); },
                          [](Rng& r) { return G{sample_sp1(r), sample_sun(6, r)}; },
                          [](const G& a, const G& b) {
                              return G{a.first * b.first, a.second * b.second};
                          },
                          cfg.samples, 1e-12, rng);
                      return residual_outcome(rep.max_residual, 1e-12);
                  }});

    cs.push_back({"e6.phi6_kernel", "Ker phi6 = {(1,E), (-1,-E)}", "Theorem 2.3", "exact",
                  [](const SuiteConfig& cfg) {
                      Mat<CRat> e = Mat<CRat>::identity(6);
                      Mat<CRat> me = CRat(Rat(-1)) * e;
                      bool kernel_ok =
                          phi6_exact(Quat<Rat>(Rat(1)), e) == MatQ::identity(54) &&
                          phi6_exact(Quat<Rat>(Rat(-1)), me) == MatQ::identity(54);
                      Rng rng = Rng::derive(cfg.seed, "e6.phi6_kernel");
                      double min_dist = 1e300;
                      for (int s = 0; s < 25; ++s) {
                          MatD m = phi6(sample_sp1(rng), sample_sun(6, rng));
                          min_dist = std::min(min_dist, inf_norm(m - MatD::identity(54)));
                      }
                      bool ok = kernel_ok && min_dist > 1e-6;
                      return bool_outcome(ok,
                                          kernel_ok ? "kernel -> id, nonkernel min dist " + fmt(min_dist)
                                                    : "kernel violated",
                                          "id exactly, others far");
                  }});

    cs.push_back({"e6.phi6_sigma_block", "sigma phi6 sigma = phi6 on S(U(2) x U(4))",
                  "Lemma 2.2", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e6.phi6_sigma");
                      MatD s = to_float(sigma54());
                      double worst = 0.0;
                      for (int k = 0; k < 5; ++k) {
                          Mat<CF> u2 = sample_sun(2, rng), u4 = sample_sun(4, rng);
                          Mat<CF> a(6, 6);
                          for (std::size_t i = 0; i < 2; ++i)
                              for (std::size_t j = 0; j < 2; ++j) a(i, j) = u2(i, j);
                          for (std::size_t i = 0; i < 4; ++i)
                              for (std::size_t j = 0; j < 4; ++j) a(2 + i, 2 + j) = u4(i, j);
                          MatD m = phi6(sample_sp1(rng), a);
                          worst = std::max(worst, inf_norm(s * m * s - m));
                      }
                      return residual_outcome(worst, 1e-12);
                  }});

    return cs;
}

// ---------------------------------------------------- e7-subalgebras suite

std::vector<Check> suite_e7_subalgebras() {
    std::vector<Check> cs;

    cs.push_back({"e7sub.e7_dim", "dim e7 = 133 = 78 + 54 + 1 by the exact rank oracle",
                  "Lemma 3.20", "exact", [](const SuiteConfig&) {
                      return count_outcome(rank_of_rows(op_vecs(e7_basis())), 133);
                  }});

    cs.push_back({"e7sub.e7_injective", "Phi(phi, A, -tau A, nu) = 0 only for zero arguments",
                  "Lemma 3.20", "exact", [](const SuiteConfig&) {
                      // 133 independent realized operators = injectivity on parameters
                      return count_outcome(rank_of_rows(op_vecs(e7_basis())), 133);
                  }});

    cs.push_back({"e7sub.e7_closure", "sampled commutators stay in e7", "Lemma 3.20", "exact",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7sub.e7_closure");
                      const auto& basis = e7_basis();
                      SparseSpan span(112 * 112);
                      for (const MatQ& op : basis) span.insert(mat_to_vec(op));
                      std::size_t pairs = std::max<std::size_t>(cfg.samples, 200);
                      for (std::size_t s = 0; s < pairs; ++s) {
                          MatQ x(112, 112), y(112, 112);
                          for (int t = 0; t < 5; ++t) {
                              x += rng.rational() * basis[static_cast<std::size_t>(rng.int_in(0, 132))];
                              y += rng.rational() * basis[static_cast<std::size_t>(rng.int_in(0, 132))];
                          }
                          if (!span.in_span(mat_to_vec(commutator(x, y))))
                              return bool_outcome(false, "escaped at sample " + std::to_string(s),
                                                  "closed");
                      }
                      return bool_outcome(true, "closed (" + std::to_string(pairs) + " pairs)",
                                          "closed");
                  }});

    cs.push_back({"e7sub.jacobi", "Jacobi identity on sampled e7 triples", "Lemma 3.20", "exact",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7sub.jacobi");
                      const auto& basis = e7_basis();
                      for (int s = 0; s < 10; ++s) {
                          const MatQ& a = basis[static_cast<std::size_t>(rng.int_in(0, 132))];
                          const MatQ& b = basis[static_cast<std::size_t>(rng.int_in(0, 132))];
                          const MatQ& c = basis[static_cast<std::size_t>(rng.int_in(0, 132))];
                          MatQ j = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                                   commutator(commutator(c, a), b);
                          if (!vec_is_zero(mat_to_vec(j)))
                              return bool_outcome(false, "violated", "Jacobi = 0");
                      }
                      return bool_outcome(true, "0", "Jacobi = 0");
                  }});

    cs.push_back({"e7sub.fixed_dim", "dim of the sigma,gamma fixed subalgebra of e7",
                  "Lemma 3.20", "exact",
                  [](const SuiteConfig&) { return count_outcome(fixed37().dim(), 37); }});

    for (FamilyId id : {FamilyId::L3_2, FamilyId::L3_6, FamilyId::L3_10, FamilyId::L3_14,
                        FamilyId::L3_18, FamilyId::L3_20}) {
        std::string name = family_name(id);
        std::string ref = "Lemma 3." + name.substr(3);

        cs.push_back({"e7sub.dim_" + name, "dimension of the " + name + " family", ref, "exact",
                      [id](const SuiteConfig&) {
                          SubalgebraBasis b = family_subalgebra(id);
                          std::size_t r = rank_of_rows(op_vecs(b.ops));
                          bool ok = r == family_expected_dim(id) && r == b.dim();
                          return Outcome{ok, std::to_string(r),
                                         std::to_string(family_expected_dim(id)), 0.0};
                      }});

        cs.push_back({"e7sub.closure_" + name, "bracket closure of " + name + " (all pairs)",
                      ref, "exact", [id](const SuiteConfig& cfg) {
                          Rng rng = Rng::derive(cfg.seed, "closure");
                          bool ok = bracket_closed(family_subalgebra(id), 100000, rng);
                          return bool_outcome(ok, ok ? "closed" : "escaped", "closed");
                      }});

        cs.push_back({"e7sub.gamma_fix_" + name, "gamma commutes with every " + name + " element",
                      ref, "exact", [id](const SuiteConfig&) {
                          SubalgebraBasis b = family_subalgebra(id);
                          const MatQ& g = gamma112();
                          for (const MatQ& op : b.ops)
                              if (!(g * op == op * g))
                                  return bool_outcome(false, "violated", "commutes");
                          if (id == FamilyId::L3_20) {
                              const MatQ& s = sigma112();
                              for (const MatQ& op : b.ops)
                                  if (!(s * op == op * s))
                                      return bool_outcome(false, "sigma violated", "commutes");
                          }
                          return bool_outcome(true, "commutes", "commutes");
                      }});

        cs.push_back({"e7sub.stabilizer_" + name,
                      name + " annihilates its designated points exactly", ref, "exact",
                      [id](const SuiteConfig&) {
                          SubalgebraBasis b = family_subalgebra(id);
                          for (const auto& pt : family_killed_points(id))
                              for (const MatQ& op : b.ops)
                                  if (!vec_is_zero(op.apply(pt)))
                                      return bool_outcome(false, "survives", "annihilated");
                          return bool_outcome(true, "annihilated", "annihilated");
                      }});
    }

    cs.push_back({"e7sub.phi4_phi8_commute", "[L3_2, L3_14] = 0 for all 6 x 28 pairs",
                  "Prop 3.19", "exact", [](const SuiteConfig&) {
                      SubalgebraBasis a = family_subalgebra(FamilyId::L3_2);
                      SubalgebraBasis b = family_subalgebra(FamilyId::L3_14);
                      for (const MatQ& x : a.ops)
                          for (const MatQ& y : b.ops)
                              if (!vec_is_zero(mat_to_vec(commutator(x, y))))
                                  return bool_outcome(false, "nonzero bracket", "all zero");
                      return bool_outcome(true, "all zero", "all zero");
                  }});

    cs.push_back({"e7sub.span_L3_18", "span(L3_2 + L3_14) equals L3_18", "Lemma 3.18", "exact",
                  [](const SuiteConfig&) {
                      auto u = op_vecs(family_subalgebra(FamilyId::L3_2).ops);
                      auto v = op_vecs(family_subalgebra(FamilyId::L3_14).ops);
                      u.insert(u.end(), v.begin(), v.end());
                      bool ok = span_equal(u, op_vecs(family_subalgebra(FamilyId::L3_18).ops));
                      return bool_outcome(ok, ok ? "equal (dim 34)" : "different", "equal");
                  }});

    cs.push_back({"e7sub.fixed_spanned", "L3_18 plus the su(2) family spans the 37-dim algebra",
                  "Prop 3.21", "exact", [](const SuiteConfig&) {
                      auto u = op_vecs(family_subalgebra(FamilyId::L3_18).ops);
                      for (const E7Elem& e : su2_family_elems()) u.push_back(mat_to_vec(realize_e7(e)));
                      bool ok = span_equal(u, op_vecs(fixed37().ops));
                      return bool_outcome(ok, ok ? "spans all 37" : "mismatch", "span equality");
                  }});

    cs.push_back({"e7sub.L3_20_is_fixed", "the L3_20 parametrization equals the fixed subalgebra",
                  "Lemma 3.20", "exact", [](const SuiteConfig&) {
                      bool ok = span_equal(op_vecs(family_subalgebra(FamilyId::L3_20).ops),
                                           op_vecs(fixed37().ops));
                      return bool_outcome(ok, ok ? "equal (dim 37)" : "different", "equal");
                  }});

    return cs;
}

// --------------------------------------------------- e7-exponentials suite

std::vector<Check> suite_e7_exponentials() {
    std::vector<Check> cs;

    cs.push_back({"e7exp.calibration", "Phi constants calibrated against the closed-form anchors",
                  "Lemmas 3.7 / 3.11 / 3.15", "float", [](const SuiteConfig&) {
                      const Calibration& c = calibration();
                      return Outcome{c.anchors_pass && c.lambda_in_e7 && c.kj_sigma_ok,
                                     c.summary(), "anchors <= 1e-9, conventions validated", 1e-9};
                  }});

    cs.push_back({"e7exp.alpha1_exp", "alpha~1(a) = exp(i F~1(a)) over seeded parameters",
                  "Lemma 3.7", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.alpha1_exp");
                      double worst = 0.0;
                      for (std::size_t s = 0; s < cfg.samples; ++s) {
                          Quat<double> a = rng.quat();
                          if (std::sqrt(norm2(a)) < 1e-3) continue;
                          JordanCF f1a = JordanCF::F(1, CF::i() * oct_cf(a));
                          worst = std::max(worst, rel_residual(matrix_exp(mult_op54f(f1a)),
                                                               alpha1_tilde54(a)));
                      }
                      return residual_outcome(worst, 1e-9);
                  }});

    cs.push_back({"e7exp.alpha1_fixes", "alpha~1(a) fixes F1(h e4), E~1 and E~-1",
                  "Lemma 3.7", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.alpha1_fixes");
                      double worst = 0.0;
                      std::vector<std::vector<double>> pts;
                      for (std::size_t b = 4; b < 8; ++b) {
                          std::vector<double> v(112, 0.0);
                          v[3 + b] = 1.0;
                          pts.push_back(v);
                      }
                      {
                          FVecF e1t, em1t;
                          e1t.Y.xi[0] = CF(1.0);
                          e1t.eta = CF(1.0);
                          em1t.Y.xi[0] = CF(1.0);
                          em1t.eta = CF(-1.0);
                          pts.push_back(coords(e1t));
                          pts.push_back(coords(em1t));
                      }
                      for (int s = 0; s < 10; ++s) {
                          Quat<double> a = rng.quat();
                          if (std::sqrt(norm2(a)) < 1e-3) continue;
                          MatD m = alpha1_tilde(a);
                          for (const auto& v : pts) {
                              std::vector<double> w = m.apply(v);
                              for (std::size_t t = 0; t < 112; ++t)
                                  worst = std::max(worst, std::fabs(w[t] - v[t]));
                          }
                      }
                      return residual_outcome(worst, cfg.tol);
                  }});

    cs.push_back({"e7exp.alpha1_2pi", "alpha~1 at |a| = 2 pi is the identity on the xi and x1 blocks",
                  "Lemma 3.7", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.alpha1_2pi");
                      Quat<double> dir = rng.unit_quat();
                      MatD m = alpha1_tilde54((2 * M_PI) * dir);
                      MatD id = MatD::identity(54);
                      double worst = 0.0;
                      // xi block: coords 0..2 (+27..29), x1 block: 3..10 (+30..37)
                      for (std::size_t j = 0; j < 54; ++j) {
                          std::size_t base = j % 27;
                          if (base > 10) continue;
                          for (std::size_t i = 0; i < 54; ++i)
                              worst = std::max(worst, std::fabs(m(i, j) - id(i, j)));
                      }
                      return residual_outcome(worst, cfg.tol);
                  }});

    cs.push_back({"e7exp.alpha23_exp", "alpha~23(t) = exp(i t (E2 - E3)~)", "Lemma 3.7", "float",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.alpha23_exp");
                      double worst = 0.0;
                      for (std::size_t s = 0; s < cfg.samples; ++s) {
                          double t = rng.uniform(-3.0, 3.0);
                          JordanCF e23 = CF(0.0, t) * (JordanCF::Ek(2) - JordanCF::Ek(3));
                          worst = std::max(worst,
                                           rel_residual(matrix_exp(mult_op54f(e23)), alpha23_tilde54(t)));
                      }
                      return residual_outcome(worst, 1e-9);
                  }});

    cs.push_back({"e7exp.alpha23_period", "alpha~23 has period 4 pi", "Lemma 3.7", "float",
                  [](const SuiteConfig& cfg) {
                      double t = 0.9;
                      return residual_outcome(
                          inf_norm(alpha23_tilde54(t + 4 * M_PI) - alpha23_tilde54(t)), cfg.tol);
                  }});

    cs.push_back({"e7exp.alphak_exp", "alpha_k(a) = exp Phi(0, a Ek, -a Ek, 0)", "Lemma 3.11",
                  "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.alphak_exp");
                      double worst = 0.0;
                      MatD zero(54, 54);
                      for (std::size_t s = 0; s < cfg.samples; ++s) {
                          int k = (s % 2 == 0) ? 2 : 3;
                          double a = rng.uniform(-3.0, 3.0);
                          JordanCF ak = CF(a) * JordanCF::Ek(static_cast<std::size_t>(k));
                          MatD e = realize_phi_f(zero, zero, ak, CF(-1.0) * ak, CF(0.0),
                                                 phi_y_sign());
                          worst = std::max(worst, rel_residual(matrix_exp(e), alpha_k(k, a)));
                      }
                      return residual_outcome(worst, 1e-9);
                  }});

    cs.push_back({"e7exp.alphak_commute", "alpha_2(a) and alpha_3(b) commute", "Lemma 3.11",
                  "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.alphak_commute");
                      double worst = 0.0;
                      for (int s = 0; s < 10; ++s) {
                          double a = rng.uniform(-3.0, 3.0), b = rng.uniform(-3.0, 3.0);
                          worst = std::max(worst, inf_norm(alpha_k(2, a) * alpha_k(3, b) -
                                                           alpha_k(3, b) * alpha_k(2, a)));
                      }
                      return residual_outcome(worst, cfg.tol);
                  }});

    cs.push_back({"e7exp.alpha_diag_exp", "alpha(t) = exp Phi(2it E1 v E1, 0, 0, -2it)",
                  "Lemma 3.15", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.alpha_diag_exp");
                      double worst = 0.0;
                      for (std::size_t s = 0; s < cfg.samples; ++s) {
                          double t = rng.uniform(-3.0, 3.0);
                          JordanQ tr = Rat(2) * JordanQ::Ek(1) - JordanQ::Ek(2) - JordanQ::Ek(3);
                          JordanCF tc = CF(0.0, 2.0 * t / 3.0) * to_cf(complexify(tr));
                          MatD phi = mult_op54f(tc);
                          MatD e = realize_phi_f(phi, phi, JordanCF(), JordanCF(), CF(0.0, -2.0 * t),
                                                 phi_y_sign());
                          worst = std::max(worst, rel_residual(matrix_exp(e), alpha_diag(t)));
                      }
                      return residual_outcome(worst, 1e-9);
                  }});

    cs.push_back({"e7exp.lambda_member", "lambda passes the E7 membership test", "§3", "float",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.lambda");
                      return residual_outcome(e7_residual(to_float(lambda_op()), 10, rng), cfg.tol);
                  }});

    cs.push_back({"e7exp.lambda_order", "lambda^2 = -id exactly", "§3", "exact",
                  [](const SuiteConfig&) {
                      MatQ l = lambda_op();
                      bool ok = l * l == -MatQ::identity(112);
                      return bool_outcome(ok, ok ? "-id" : "different", "-id");
                  }});

    cs.push_back({"e7exp.exp_membership", "exponentials of random e7 elements pass is_e7",
                  "Lemma 3.20", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "e7exp.exp_membership");
                      const auto& basis = e7_basis();
                      double worst = 0.0;
                      for (int s = 0; s < 10; ++s) {
                          MatD t(112, 112);
                          for (int k = 0; k < 6; ++k) {
                              double c = rng.uniform(-0.5, 0.5);
                              const MatQ& b = basis[static_cast<std::size_t>(rng.int_in(0, 132))];
                              MatD bf = to_float(b);
                              for (auto& x : bf.data()) x *= c;
                              t += bf;
                          }
                          worst = std::max(worst, e7_residual(matrix_exp(t), 5, rng));
                      }
                      return residual_outcome(worst, cfg.tol);
                  }});

    return cs;
}

// ------------------------------------------------------- e7-spheres suite

struct WordCheckStats {
    double max_residual = 0.0;
    double max_member = 0.0;
    double max_stab = 0.0;
    double max_drift = 0.0;
    double max_gamma = 0.0;  // gamma-commutation residual of word operators
    std::size_t max_len = 0;
};

// stabilizer targets per stratum: every word operator must fix them
std::vector<std::vector<double>> stratum_fixed_points(VTag tag) {
    std::vector<std::vector<double>> pts;
    for (std::size_t b = 4; b < 8; ++b) {
        std::vector<double> v(112, 0.0);
        v[3 + b] = 1.0;  // F1(h e4)
        pts.push_back(v);
    }
    if (tag != VTag::V8) {
        FVecF e1t;
        e1t.Y.xi[0] = CF(1.0);
        e1t.eta = CF(1.0);
        pts.push_back(coords(e1t));
    }
    if (tag == VTag::V6) {
        FVecF em1t;
        em1t.Y.xi[0] = CF(1.0);
        em1t.eta = CF(-1.0);
        pts.push_back(coords(em1t));
    }
    return pts;
}

WordCheckStats run_sphere_batch(VTag tag, std::size_t n_points, const SuiteConfig& cfg, Rng& rng) {
    WordCheckStats st;
    auto fixed_pts = stratum_fixed_points(tag);
    MatD g = to_float(gamma112());
    for (std::size_t s = 0; s < n_points; ++s) {
        VPoint p = sample_sphere(tag, rng);
        CanonResult res;
        switch (tag) {
            case VTag::V6: res = canonicalize_s5(p, 1e-12); break;
            case VTag::V7: res = canonicalize_s6(p, 1e-12); break;
            case VTag::V8: res = canonicalize_s7(p, 1e-12); break;
        }
        st.max_residual = std::max(st.max_residual, res.residual);
        st.max_len = std::max(st.max_len, res.word.size());

        FVecF cur = embed(p);
        for (const WordStep& step : res.word) {
            st.max_member = std::max(st.max_member, e7_residual(step.op, 3, rng));
            st.max_gamma = std::max(st.max_gamma, inf_norm(step.op * g - g * step.op));
            for (const auto& v : fixed_pts) {
                std::vector<double> w = step.op.apply(v);
                for (std::size_t t = 0; t < 112; ++t)
                    st.max_stab = std::max(st.max_stab, std::fabs(w[t] - v[t]));
            }
            cur = apply_op(step.op, cur);
            VPoint q = extract_vpoint(cur, VTag::V8, 1e-6);
            st.max_drift = std::max(st.max_drift, std::fabs(mu_norm(q) - 1.0));
        }
    }
    (void)cfg;
    return st;
}

std::vector<Check> suite_e7_spheres() {
    std::vector<Check> cs;

    cs.push_back({"sph.v_dims", "V6 / V7 / V8 embed with exact dimensions 6, 7, 8", "§3",
                  "exact", [](const SuiteConfig&) {
                      std::vector<std::size_t> dims;
                      for (VTag tag : {VTag::V6, VTag::V7, VTag::V8}) {
                          std::vector<std::vector<Rat>> rows;
                          for (const FVecQ& p : vspace_basis_exact(tag)) rows.push_back(coords(p));
                          dims.push_back(rank_of_rows(rows));
                      }
                      bool ok = dims == std::vector<std::size_t>{6, 7, 8};
                      return bool_outcome(ok,
                                          std::to_string(dims[0]) + "," + std::to_string(dims[1]) +
                                              "," + std::to_string(dims[2]),
                                          "6,7,8");
                  }});

    cs.push_back({"sph.v_gamma_fixed", "each V-space is pointwise gamma-fixed", "§3", "exact",
                  [](const SuiteConfig&) {
                      const MatQ& g = gamma112();
                      for (VTag tag : {VTag::V6, VTag::V7, VTag::V8})
                          for (const FVecQ& p : vspace_basis_exact(tag)) {
                              std::vector<Rat> v = coords(p);
                              if (g.apply(v) != v) return bool_outcome(false, "moved", "fixed");
                          }
                      return bool_outcome(true, "fixed", "fixed");
                  }});

    cs.push_back({"sph.distinguished", "distinguished points have the stated coordinates", "§3",
                  "exact", [](const SuiteConfig&) {
                      FVecQ e1t = e1_tilde<CRat>(), em1 = em1_tilde<CRat>(), ed = edot23<CRat>();
                      bool ok = e1t.Y == JordanCQ::Ek(1) && e1t.eta == CRat(Rat(1)) &&
                                is_zero(e1t.X) && is_zero(e1t.xi) && em1.eta == CRat(Rat(-1)) &&
                                ed.X == JordanCQ::Ek(2) + JordanCQ::Ek(3) && is_zero(ed.Y);
                      return bool_outcome(ok, ok ? "as displayed" : "wrong", "as displayed");
                  }});

    cs.push_back({"sph.herm_examples", "<E~1, E~1> = 2 and <E~1, E~-1> = 0", "§3", "exact",
                  [](const SuiteConfig&) {
                      CRat a = herm_inner(e1_tilde<CRat>(), e1_tilde<CRat>());
                      CRat b = herm_inner(e1_tilde<CRat>(), em1_tilde<CRat>());
                      bool ok = a == CRat(Rat(2)) && b == CRat(Rat(0));
                      return bool_outcome(ok, ok ? "2 and 0" : "wrong", "2 and 0");
                  }});

    cs.push_back({"sph.skew_antisym", "{P,Q} = -{Q,P} and lambda preserves the skew form", "§3",
                  "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "sph.skew");
                      double worst = 0.0;
                      for (int s = 0; s < 20; ++s) {
                          std::vector<double> va(112), vb(112);
                          for (auto& x : va) x = rng.gaussian();
                          for (auto& x : vb) x = rng.gaussian();
                          FVecF p = fvec_from_coords(va), q = fvec_from_coords(vb);
                          CF anti = skew_form(p, q) + skew_form(q, p);
                          CF lam = skew_form(lambda_map(p), lambda_map(q)) - skew_form(p, q);
                          worst = std::max({worst, cabs(anti), cabs(lam)});
                      }
                      return residual_outcome(worst, 1e-10);
                  }});

    cs.push_back({"sph.lambda_e1", "lambda E~1 = (E1, 0, 1, 0)", "§3", "exact",
                  [](const SuiteConfig&) {
                      FVecQ l = lambda_map(e1_tilde<CRat>());
                      bool ok = l.X == JordanCQ::Ek(1) && is_zero(l.Y) && l.xi == CRat(Rat(1)) &&
                                is_zero(l.eta);
                      return bool_outcome(ok, ok ? "(E1,0,1,0)" : "wrong", "(E1,0,1,0)");
                  }});

    cs.push_back({"sph.sigma_gamma_forms", "sigma/gamma on P^C preserve both forms and commute",
                  "§3", "exact", [](const SuiteConfig& cfg) {
                      const MatQ &s = sigma112(), &g = gamma112();
                      MatQ id = MatQ::identity(112);
                      bool involutive = s * s == id && g * g == id && s * g == g * s;
                      Rng rng = Rng::derive(cfg.seed, "sph.forms");
                      double worst = 0.0;
                      for (int k = 0; k < 10; ++k) {
                          std::vector<double> va(112), vb(112);
                          for (auto& x : va) x = rng.gaussian();
                          for (auto& x : vb) x = rng.gaussian();
                          FVecF p = fvec_from_coords(va), q = fvec_from_coords(vb);
                          FVecF sp = sigma_p(p), sq = sigma_p(q);
                          FVecF gp = gamma_p(p), gq = gamma_p(q);
                          worst = std::max(worst, cabs(herm_inner(sp, sq) - herm_inner(p, q)));
                          worst = std::max(worst, cabs(skew_form(sp, sq) - skew_form(p, q)));
                          worst = std::max(worst, cabs(herm_inner(gp, gq) - herm_inner(p, q)));
                          worst = std::max(worst, cabs(skew_form(gp, gq) - skew_form(p, q)));
                      }
                      return Outcome{involutive && worst <= 1e-10,
                                     involutive ? "involutive, drift " + fmt(worst) : "not involutive",
                                     "involutive, forms preserved", 1e-10};
                  }});

    cs.push_back({"sph.mu_examples", "mu-norm closed-form examples", "§3", "float",
                  [](const SuiteConfig&) {
                      VPoint a;
                      a.tag = VTag::V6;
                      a.xi = CF(0.0, 1.0);
                      VPoint b;
                      b.tag = VTag::V8;
                      b.eta = CF(1.0);
                      VPoint c;
                      c.tag = VTag::V6;
                      c.h = Quat<double>(0.0, 1.0, 0.0, 0.0);
                      bool ok = mu_norm(a) == 1.0 && mu_norm(b) == 1.0 && mu_norm(c) == 1.0;
                      return bool_outcome(ok, ok ? "1, 1, 1" : "wrong", "1, 1, 1");
                  }});

    cs.push_back({"sph.mu_matches_embedding", "mu-norm agrees with the embedded closed form",
                  "§3", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "sph.mu_embed");
                      double worst = 0.0;
                      for (VTag tag : {VTag::V6, VTag::V7, VTag::V8})
                          for (int s = 0; s < 20; ++s) {
                              VPoint p = sample_sphere(tag, rng);
                              VPoint q = extract_vpoint(embed(p), tag, 1e-12);
                              worst = std::max(worst, std::fabs(mu_norm(q) - mu_norm(p)));
                          }
                      return residual_outcome(worst, 1e-12);
                  }});

    cs.push_back({"sph.sampler", "sphere sampler: unit norm, deterministic, nondegenerate",
                  "§3", "float", [](const SuiteConfig& cfg) {
                      double worst = 0.0;
                      for (VTag tag : {VTag::V6, VTag::V7, VTag::V8}) {
                          Rng r1 = Rng::derive(cfg.seed, "sph.sampler");
                          Rng r2 = Rng::derive(cfg.seed, "sph.sampler");
                          std::vector<bool> seen(8, false);
                          for (int s = 0; s < 100; ++s) {
                              VPoint a = sample_sphere(tag, r1);
                              VPoint b = sample_sphere(tag, r2);
                              if (!(a.xi == b.xi && a.h == b.h && a.eta == b.eta))
                                  return bool_outcome(false, "nondeterministic", "deterministic");
                              worst = std::max(worst, std::fabs(mu_norm(a) - 1.0));
                              if (std::fabs(a.xi.re) > 1e-12) seen[0] = true;
                              if (std::fabs(a.xi.im) > 1e-12) seen[1] = true;
                              for (std::size_t c = 0; c < 4; ++c)
                                  if (std::fabs(a.h.c[c]) > 1e-12) seen[2 + c] = true;
                              if (std::fabs(a.eta.re) > 1e-12) seen[6] = true;
                              if (std::fabs(a.eta.im) > 1e-12) seen[7] = true;
                          }
                          std::size_t need = tag == VTag::V6 ? 6 : (tag == VTag::V7 ? 7 : 8);
                          for (std::size_t c = 0; c < need; ++c)
                              if (!seen[c]) return bool_outcome(false, "degenerate marginal", "nondegenerate");
                      }
                      return Outcome{worst <= 1e-14, "norm err " + fmt(worst),
                                     "<= 1e-14, deterministic, nondegenerate", 1e-14};
                  }});

    cs.push_back({"sph.alpha23_example", "alpha~23(pi/2) maps (E2-E3,0,0,0) to i Edot23",
                  "Lemma 3.8", "float", [](const SuiteConfig& cfg) {
                      FVecF p;
                      p.X.xi[1] = CF(1.0);
                      p.X.xi[2] = CF(-1.0);
                      FVecF got = apply_op(alpha23_tilde(M_PI / 2), p);
                      return residual_outcome(point_distance(got, s5_target()), cfg.tol);
                  }});

    cs.push_back({"sph.alpha_diag_example", "alpha(-pi/4) maps (0,-iE1,0,i) to E~1",
                  "Lemma 3.16", "float", [](const SuiteConfig& cfg) {
                      FVecF got = apply_op(alpha_diag(-M_PI / 4), s6_target());
                      return residual_outcome(point_distance(got, s7_target()), cfg.tol);
                  }});

    cs.push_back({"sph.s5_pinned_point", "(E2-E3,0,0,0) reduces by the final step alone",
                  "Lemma 3.8", "float", [](const SuiteConfig&) {
                      VPoint p;
                      p.tag = VTag::V6;
                      p.xi = CF(1.0);
                      CanonResult res = canonicalize_s5(p, 1e-12);
                      bool ok = res.word.size() == 1 && res.residual <= 1e-12;
                      return Outcome{ok,
                                     "word " + std::to_string(res.word.size()) + ", residual " +
                                         fmt(res.residual),
                                     "1 step, residual ~ 0", 1e-12};
                  }});

    cs.push_back({"sph.s6_eta_kill", "the chosen a kills the eta term", "Lemma 3.12", "float",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "sph.s6_eta");
                      double worst = 0.0;
                      for (int s = 0; s < 20; ++s) {
                          VPoint p = sample_sphere(VTag::V7, rng);
                          CanonResult res = canonicalize_s6(p, 1e-12);
                          // after the first alpha23 step the eta slot must vanish
                          FVecF cur = embed(p);
                          if (!res.word.empty() && res.word.front().generator == "alpha23") {
                              cur = apply_op(res.word.front().op, cur);
                              worst = std::max(worst, cabs(cur.Y.xi[0]));
                          }
                      }
                      return residual_outcome(worst, cfg.tol);
                  }});

    cs.push_back({"sph.s7_fixed_point", "E~1 itself canonicalizes with residual 0",
                  "Lemma 3.16", "float", [](const SuiteConfig& cfg) {
                      VPoint p;
                      p.tag = VTag::V8;
                      p.eta = CF(1.0);
                      CanonResult res = canonicalize_s7(p, 1e-12);
                      return residual_outcome(res.residual, cfg.tol);
                  }});

    cs.push_back({"sph.s6_pinned_point", "embedded i(E2+E3) ends with alpha23(-pi/4)",
                  "Lemma 3.12", "float", [](const SuiteConfig& cfg) {
                      VPoint p;
                      p.tag = VTag::V7;
                      p.xi = CF(0.0, 1.0);
                      CanonResult res = canonicalize_s6(p, 1e-12);
                      bool last_ok = !res.word.empty() && res.word.back().generator == "alpha23" &&
                                     std::fabs(res.word.back().params[0] + M_PI / 4) < 1e-12;
                      return Outcome{last_ok && res.residual <= cfg.tol,
                                     "residual " + fmt(res.residual), "ends alpha23(-pi/4), residual ~ 0",
                                     cfg.tol};
                  }});

    auto sphere_check = [](const char* id, const char* desc, const char* ref, VTag tag,
                           std::size_t max_len) {
        return Check{id, desc, ref, "float", [tag, max_len, id](const SuiteConfig& cfg) {
                         Rng rng = Rng::derive(cfg.seed, id);
                         WordCheckStats st = run_sphere_batch(tag, 100, cfg, rng);
                         bool ok = st.max_residual <= 1e-8 && st.max_member <= cfg.tol &&
                                   st.max_stab <= cfg.tol && st.max_drift <= cfg.tol &&
                                   st.max_gamma <= cfg.tol && st.max_len <= max_len;
                         std::ostringstream os;
                         os << "residual " << fmt(st.max_residual) << ", member "
                            << fmt(st.max_member) << ", stab " << fmt(st.max_stab) << ", drift "
                            << fmt(st.max_drift) << ", gamma " << fmt(st.max_gamma) << ", len "
                            << st.max_len;
                         return Outcome{ok, os.str(),
                                        "residual <= 1e-8, props <= tol, len <= " +
                                            std::to_string(max_len),
                                        1e-8};
                     }};
    };
    cs.push_back(sphere_check("sph.s5_batch", "100 seeded S^5 points canonicalize", "Lemma 3.8",
                              VTag::V6, 4));
    cs.push_back(sphere_check("sph.s6_batch", "100 seeded S^6 points canonicalize", "Lemma 3.12",
                              VTag::V7, 6));
    cs.push_back(sphere_check("sph.s7_batch", "100 seeded S^7 points canonicalize", "Lemma 3.16",
                              VTag::V8, 8));

    return cs;
}

// ------------------------------------------------------- e7-theorem suite

std::vector<Check> suite_e7_theorem() {
    std::vector<Check> cs;

    cs.push_back({"thm.su2_identity", "phi(E) = id and phi(-E) has the displayed sign pattern",
                  "Prop 3.21", "exact", [](const SuiteConfig&) {
                      MatQ id = MatQ::identity(112);
                      Mat<CRat> e = Mat<CRat>::identity(2);
                      bool ok = phi_su2_exact(e) == id;
                      Mat<CRat> me = CRat(Rat(-1)) * e;
                      MatQ pm = phi_su2_exact(me);
                      // phi(-E) negates the paired slots and fixes x2,y2,x3,y3
                      bool shape = pm * pm == id;
                      return bool_outcome(ok && shape, ok ? "id, involutive phi(-E)" : "wrong",
                                          "id, involutive phi(-E)");
                  }});

    cs.push_back({"thm.kernel_products", "all four kernel triples act as the identity on P^C",
                  "Theorem 3.23", "exact", [](const SuiteConfig&) {
                      MatQ id = MatQ::identity(112);
                      const MatQ &s = sigma112(), &g = gamma112();
                      Mat<CRat> me = CRat(Rat(-1)) * Mat<CRat>::identity(2);
                      MatQ pm = phi_su2_exact(me);
                      MatQ sg = s * g;
                      bool ok = true;
                      ok = ok && (id == id);                    // (E, 1, 1)
                      ok = ok && (s * s == id);                 // (E, sigma, sigma)
                      ok = ok && (pm * g * (-(sg)) == id);      // (-E, gamma, -sigma gamma)
                      ok = ok && (pm * sg * (-g) == id);        // (-E, sigma gamma, -gamma)
                      return bool_outcome(ok, ok ? "all identity" : "violated", "all identity");
                  }});

    cs.push_back({"thm.nonkernel", "generic (A, alpha, beta) triples act nontrivially",
                  "Theorem 3.23", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "thm.nonkernel");
                      SubalgebraBasis l14 = family_subalgebra(FamilyId::L3_14);
                      double min_dist = 1e300;
                      for (int s = 0; s < 10; ++s) {
                          MatD a = phi_su2(sample_su2(rng));
                          MatD alpha = to_float(sigma112());
                          if (rng.uniform() < 0.5) alpha = MatD::identity(112);
                          MatD t(112, 112);
                          for (int k = 0; k < 4; ++k) {
                              double c = rng.uniform(-0.4, 0.4);
                              MatD bf = to_float(
                                  l14.ops[static_cast<std::size_t>(rng.int_in(0, 27))]);
                              for (auto& x : bf.data()) x *= c;
                              t += bf;
                          }
                          MatD beta = matrix_exp(t);
                          min_dist = std::min(min_dist,
                                              inf_norm(a * alpha * beta - MatD::identity(112)));
                      }
                      return bool_outcome(min_dist > 1e-6, "min dist " + fmt(min_dist),
                                          "> 1e-6 from identity");
                  }});

    cs.push_back({"thm.su2_membership", "phi(A) passes is_e7 and commutes with sigma, gamma",
                  "Prop 3.21", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "thm.su2_membership");
                      double worst = 0.0;
                      MatD s = to_float(sigma112()), g = to_float(gamma112());
                      for (int k = 0; k < 5; ++k) {
                          MatD m = phi_su2(sample_su2(rng));
                          worst = std::max(worst, e7_residual(m, 5, rng));
                          worst = std::max(worst, inf_norm(s * m - m * s));
                          worst = std::max(worst, inf_norm(g * m - m * g));
                      }
                      return residual_outcome(worst, cfg.tol);
                  }});

    cs.push_back({"thm.su2_homomorphism", "phi(A1) phi(A2) = phi(A1 A2)", "Prop 3.21", "float",
                  [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "thm.su2_homomorphism");
                      auto rep = verify_homomorphism<Mat<CF>>(
                          [](const Mat<CF>& a) { return phi_su2(a); },
                          [](Rng& r) { return sample_su2(r); },
                          [](const Mat<CF>& a, const Mat<CF>& b) { return a * b; }, cfg.samples,
                          1e-12, rng);
                      return residual_outcome(rep.max_residual, 1e-12);
                  }});

    cs.push_back({"thm.su2_exp", "phi(exp S) = exp Phi(2 nu E1 v E1, a E1, -tau a E1, nu)",
                  "Prop 3.21", "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "thm.su2_exp");
                      double worst = 0.0;
                      for (int s = 0; s < 10; ++s) {
                          double n = rng.uniform(-0.4, 0.4);
                          CF a(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4));
                          // A = exp [[nu, a], [-tau a, -nu]], nu = i n
                          Mat<CF> sm(2, 2);
                          sm(0, 0) = CF(0.0, n);
                          sm(0, 1) = a;
                          sm(1, 0) = CF(-1.0) * tau(a);
                          sm(1, 1) = CF(0.0, -n);
                          // 2x2 complex exp via the real 4x4 representation
                          MatD rm(4, 4);
                          for (std::size_t i = 0; i < 2; ++i)
                              for (std::size_t j = 0; j < 2; ++j) {
                                  rm(2 * i, 2 * j) = sm(i, j).re;
                                  rm(2 * i, 2 * j + 1) = -sm(i, j).im;
                                  rm(2 * i + 1, 2 * j) = sm(i, j).im;
                                  rm(2 * i + 1, 2 * j + 1) = sm(i, j).re;
                              }
                          MatD em = matrix_exp(rm);
                          Mat<CF> A(2, 2);
                          for (std::size_t i = 0; i < 2; ++i)
                              for (std::size_t j = 0; j < 2; ++j)
                                  A(i, j) = CF(em(2 * i, 2 * j), em(2 * i + 1, 2 * j));

                          JordanQ tr = Rat(2) * JordanQ::Ek(1) - JordanQ::Ek(2) - JordanQ::Ek(3);
                          JordanCF tc = CF(0.0, 2.0 * n / 3.0) * to_cf(complexify(tr));
                          MatD phi = mult_op54f(tc);
                          JordanCF ae1 = a * JordanCF::Ek(1);
                          JordanCF be1 = CF(-1.0) * tau(a) * JordanCF::Ek(1);
                          MatD big = realize_phi_f(phi, phi, ae1, be1, CF(0.0, n), phi_y_sign());
                          worst = std::max(worst, rel_residual(matrix_exp(big), phi_su2(A)));
                      }
                      return residual_outcome(worst, 1e-9);
                  }});

    cs.push_back({"thm.su2_pairs_fixed", "phi(A) fixes the x2, y2, x3, y3 slots", "Prop 3.21",
                  "float", [](const SuiteConfig& cfg) {
                      Rng rng = Rng::derive(cfg.seed, "thm.su2_pairs");
                      double worst = 0.0;
                      for (int s = 0; s < 5; ++s) {
                          MatD m = phi_su2(sample_su2(rng));
                          std::vector<double> v(112);
                          for (auto& x : v) x = rng.gaussian();
                          FVecF p = fvec_from_coords(v);
                          FVecF q = apply_op(m, p);
                          for (std::size_t k = 1; k < 3; ++k)
                              for (std::size_t c = 0; c < 8; ++c) {
                                  worst = std::max(worst, cabs(q.X.x[k].coord(c) - p.X.x[k].coord(c)));
                                  worst = std::max(worst, cabs(q.Y.x[k].coord(c) - p.Y.x[k].coord(c)));
                              }
                      }
                      return residual_outcome(worst, 1e-12);
                  }});

    return cs;
}

// ----------------------------------------------------------- tables suite

std::vector<Check> suite_tables() {
    std::vector<Check> cs;

    struct Row {
        const char* id;
        const char* desc;
        const char* ref;
        const char* label;
        const SubalgebraBasis& (*algebra)();
        std::size_t dim, rank, center;
    };
    static const Row rows[] = {
        {"tables.f4_invariants", "16-dim algebra: rank 4, center 0, Killing negative definite",
         "Theorem 1.3", "fixed16", fixed16, 16, 4, 0},
        {"tables.e6_invariants", "22-dim algebra: rank 6, center 1, Killing definite mod center",
         "Theorem 2.3", "fixed22", fixed22, 22, 6, 1},
        {"tables.e7_invariants", "37-dim algebra: rank 7, center 0, Killing negative definite",
         "Theorem 3.23", "fixed37", fixed37, 37, 7, 0},
    };
    for (const Row& row : rows) {
        cs.push_back({row.id, row.desc, row.ref, "exact", [&row](const SuiteConfig& cfg) {
                          StructureInvariants inv = cached_invariants(row.algebra(), row.label, cfg);
                          bool ok = inv.dim == row.dim && inv.rank == row.rank &&
                                    inv.center_dim == row.center && inv.compact &&
                                    inv.killing.neg == row.dim - row.center &&
                                    inv.killing.zero == row.center && inv.killing.pos == 0;
                          std::ostringstream os;
                          os << "dim " << inv.dim << ", rank " << inv.rank << ", center "
                             << inv.center_dim << ", killing (" << inv.killing.neg << ","
                             << inv.killing.zero << "," << inv.killing.pos << ")";
                          std::ostringstream want;
                          want << "dim " << row.dim << ", rank " << row.rank << ", center "
                               << row.center << ", killing (" << row.dim - row.center << ","
                               << row.center << ",0)";
                          return Outcome{ok, os.str(), want.str(), 0.0};
                      }});
    }

    cs.push_back({"tables.derived_dims", "derived algebra dims: 16, 21, 37", "Theorem 3.23",
                  "exact", [](const SuiteConfig& cfg) {
                      std::vector<std::size_t> got;
                      got.push_back(cached_invariants(fixed16(), "fixed16", cfg).derived_dim);
                      got.push_back(cached_invariants(fixed22(), "fixed22", cfg).derived_dim);
                      got.push_back(cached_invariants(fixed37(), "fixed37", cfg).derived_dim);
                      bool ok = got == std::vector<std::size_t>{16, 21, 37};
                      return bool_outcome(ok,
                                          std::to_string(got[0]) + "," + std::to_string(got[1]) +
                                              "," + std::to_string(got[2]),
                                          "16,21,37");
                  }});

    cs.push_back({"tables.sum_f4", "16 = 3+3+10 = 6+10 matches both table rows", "Theorem 1.3",
                  "exact", [](const SuiteConfig&) {
                      bool ok = fixed16().dim() == 3 + 3 + 10 && fixed16().dim() == 6 + 10;
                      return bool_outcome(ok, std::to_string(fixed16().dim()), "16 both ways");
                  }});
    cs.push_back({"tables.sum_e6", "22 = 3+19 = 1+6+15 matches both table rows", "Theorem 2.3",
                  "exact", [](const SuiteConfig&) {
                      bool ok = fixed22().dim() == 3 + 19 && fixed22().dim() == 1 + 6 + 15;
                      return bool_outcome(ok, std::to_string(fixed22().dim()), "22 both ways");
                  }});
    cs.push_back({"tables.sum_e7", "37 = 3+6+28 in both table rows", "Theorem 3.23", "exact",
                  [](const SuiteConfig&) {
                      bool ok = fixed37().dim() == 3 + 6 + 28;
                      return bool_outcome(ok, std::to_string(fixed37().dim()), "37");
                  }});

    return cs;
}

// -------------------------------------------------------------- registry

std::vector<Check> checks_for(const std::string& name) {
    if (name == "f4") return suite_f4();
    if (name == "e6") return suite_e6();
    if (name == "e7-subalgebras") return suite_e7_subalgebras();
    if (name == "e7-exponentials") return suite_e7_exponentials();
    if (name == "e7-spheres") return suite_e7_spheres();
    if (name == "e7-theorem") return suite_e7_theorem();
    if (name == "tables") return suite_tables();
    if (name == "all") {
        std::vector<Check> all;
        for (const char* n :
             {"f4", "e6", "e7-subalgebras", "e7-exponentials", "e7-spheres", "e7-theorem", "tables"}) {
            std::vector<Check> part = checks_for(n);
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "f4", "e6", "e7-subalgebras", "e7-exponentials", "e7-spheres", "e7-theorem", "tables", "all"};
    return names;
}

bool is_suite(const std::string& name) {
    for (const std::string& n : suite_names())
        if (n == name) return true;
    return false;
}

std::vector<std::string> suite_check_ids(const std::string& name) {
    std::vector<std::string> ids;
    for (const Check& c : checks_for(name)) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    std::vector<Check> checks = checks_for(name);
    std::sort(checks.begin(), checks.end(),
              [](const Check& a, const Check& b) { return a.id < b.id; });

    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= checks.size()) return;
            const Check& c = checks[k];
            CheckResult r;
            r.id = c.id;
            r.description = c.description;
            r.paper_ref = c.paper_ref;
            auto t0 = std::chrono::steady_clock::now();
            if (cfg.backend != "auto" && cfg.backend != c.backend) {
                r.status = "skip";
                r.measured = "skipped (backend " + cfg.backend + ")";
                r.expected = "";
            } else {
                try {
                    Outcome out = c.run(cfg);
                    r.status = out.pass ? "pass" : "fail";
                    r.measured = out.measured;
                    r.expected = out.expected;
                    r.tolerance = out.tolerance;
                } catch (const std::exception& ex) {
                    r.status = "fail";
                    r.measured = std::string("exception: ") + ex.what();
                    r.expected = "no exception";
                }
            }
            r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
            results[k] = std::move(r);
        }
    };

    std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SuiteReport rep;
    rep.suite = name;
    rep.seed = cfg.seed;
    rep.backend = cfg.backend;
    rep.calibration = calibration().summary();
    rep.checks = std::move(results);
    bool all_pass = true;
    for (const CheckResult& r : rep.checks)
        if (r.status == "fail") all_pass = false;
    rep.status = all_pass ? "pass" : "fail";
    return rep;
}

}  // namespace exc
