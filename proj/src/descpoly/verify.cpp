#include "descpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "descpoly/descent.hpp"
#include "descpoly/error.hpp"
#include "descpoly/eulerian.hpp"
#include "descpoly/genfunc.hpp"
#include "descpoly/juggling.hpp"
#include "descpoly/permutation.hpp"
#include "descpoly/polynomial.hpp"

namespace descpoly {

std::string_view suite_name(Suite suite) noexcept {
  switch (suite) {
    case Suite::Identities:
      return "identities";
    case Suite::Routes:
      return "routes";
    case Suite::Bijections:
      return "bijections";
    case Suite::Juggling:
      return "juggling";
    case Suite::Structure:
      return "structure";
    case Suite::All:
      return "all";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (Suite s : {Suite::Identities, Suite::Routes, Suite::Bijections, Suite::Juggling, Suite::Structure,
                  Suite::All})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

namespace {

// A failing case stops its check; the first counterexample is kept.
class Check {
 public:
  Check(Suite suite, std::string claim) {
    result_.suite = std::string(suite_name(suite));
    result_.claim = std::move(claim);
  }

  bool failed() const { return !result_.passed; }

  template <typename Describe>
  bool expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
    return ok;
  }

  CheckResult run(const std::function<void(Check&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      result_.passed = false;
      result_.counterexample = std::string("exception: ") + e.what();
    }
    return result_;
  }

 private:
  CheckResult result_;
};

std::string coeffs_of(const IntPoly& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) os << (j ? "," : "") << p.coeffs()[j];
  os << ']';
  return os.str();
}

std::string set_of(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v[j];
  os << '}';
  return os.str();
}

std::string nk(std::size_t n, std::size_t k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

void for_each_sn(std::size_t n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& base) {
  std::vector<std::vector<int>> out;
  const std::size_t count = std::size_t{1} << base.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> s;
    for (std::size_t b = 0; b < base.size(); ++b)
      if (mask >> b & 1u) s.push_back(base[b]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<int>> k_subsets(int lo, int hi, std::size_t size) {
  std::vector<int> pool;
  for (int v = std::max(lo, 1); v <= hi; ++v) pool.push_back(v);
  std::vector<std::vector<int>> out;
  if (size > pool.size()) return out;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    std::vector<int> s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) s.push_back(pool[i]);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// identities

void identities(const VerifyBounds& b, std::vector<CheckResult>& out) {
  const Suite s = Suite::Identities;
  out.push_back(Check(s, "A_n equals the descent census over S_n").run([&](Check& c) {
    for (std::size_t n = 0; n <= std::min<std::size_t>(b.nmax, 8); ++n) {
      std::vector<Integer> census(std::max<std::size_t>(n, 1));
      for_each_sn(n, [&](const Permutation& p) { census[des(p)] += 1; });
      IntPoly brute(std::move(census));
      IntPoly formula = eulerian_poly(static_cast<unsigned>(n));
      if (!c.expect(brute == formula, [&] {
            return "n=" + std::to_string(n) + ": formula " + coeffs_of(formula) + " vs census " + coeffs_of(brute);
          }))
        return;
    }
  }));
  out.push_back(Check(s, "A_n(1) = n! and A_n is symmetric for 1 <= n <= 12").run([&](Check& c) {
    Integer fact = 1;
    for (unsigned n = 1; n <= 12; ++n) {
      fact *= n;
      IntPoly a = eulerian_poly(n);
      if (!c.expect(a.eval(1) == fact && reverse(a, n - 1) == a,
                    [&] { return "n=" + std::to_string(n) + ": A_n = " + coeffs_of(a); }))
        return;
    }
  }));
  out.push_back(Check(s, "sum_t C(k',t)(x-1)^t A_{k'-t}(x) = x A_{k'}(x) for k' >= 1").run([&](Check& c) {
    for (unsigned kp = 1; kp <= b.kmax; ++kp) {
      IntPoly r = euler_identity_residual(kp);
      if (!c.expect(r.is_zero(), [&] { return "k'=" + std::to_string(kp) + ": residual " + coeffs_of(r); }))
        return;
    }
  }));
  out.push_back(Check(s, "Eulerian identity at k' = 0 leaves residual 1 - x").run([&](Check& c) {
    IntPoly r = euler_identity_residual(0);
    c.expect(r == IntPoly{1, -1}, [&] { return "residual " + coeffs_of(r); });
  }));
  out.push_back(Check(s, "a,b Eulerian identity holds for |a|,|b| <= kmax, a + b >= 0").run([&](Check& c) {
    const long box = static_cast<long>(b.kmax);
    for (long a = -box; a <= box; ++a)
      for (long bb = -box; bb <= box; ++bb) {
        if (a + bb < 0) continue;
        IntPoly r = ab_identity_residual(a, bb);
        if (!c.expect(r.is_zero(), [&] {
              return "a=" + std::to_string(a) + " b=" + std::to_string(bb) + ": residual " + coeffs_of(r);
            }))
          return;
      }
  }));
}

// routes

void routes(const VerifyBounds& b, std::vector<CheckResult>& out) {
  const Suite s = Suite::Routes;
  out.push_back(Check(s, "enumerate_bnk equals the S_n filter by maxdrop").run([&](Check& c) {
    for (std::size_t n = 0; n <= std::min<std::size_t>(b.nmax, 9); ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Permutation> filtered;
        for_each_sn(n, [&](const Permutation& p) {
          if (static_cast<std::size_t>(maxdrop(p)) <= k) filtered.push_back(p);
        });
        auto direct = enumerate_bnk(n, k);
        std::sort(direct.begin(), direct.end());
        if (!c.expect(direct == filtered && Integer(direct.size()) == bnk_cardinality(n, k), [&] {
              return nk(n, k) + ": generated " + std::to_string(direct.size()) + ", filter " +
                     std::to_string(filtered.size());
            }))
          return;
      }
  }));
  out.push_back(Check(s, "enumeration = recurrence = closed form for 0 <= k < n <= nmax").run([&](Check& c) {
    for (std::size_t n = 1; n <= b.nmax; ++n)
      for (std::size_t k = 0; k < n; ++k) {
        IntPoly e = bnk_enumeration(n, k, b.nmax).poly;
        IntPoly r = bnk_recurrence(n, k).poly;
        IntPoly f = bnk_closedform(n, k).poly;
        if (!c.expect(e == r && r == f, [&] {
              return nk(n, k) + ": enum " + coeffs_of(e) + " rec " + coeffs_of(r) + " closed " + coeffs_of(f);
            }))
          return;
      }
  }));
  const std::size_t big = std::max<std::size_t>(20, b.nmax);
  out.push_back(Check(s, "B_{n,k}(1) = k!(k+1)^{n-k} for k <= n <= 20").run([&](Check& c) {
    for (std::size_t k = 0; k <= big; ++k) {
      auto table = bnk_recurrence_table(big, k);
      for (std::size_t n = k; n <= big; ++n) {
        Integer total = table[n].eval(1);
        if (!c.expect(total == bnk_cardinality(n, k), [&] {
              std::ostringstream os;
              os << nk(n, k) << ": B(1) = " << total << ", expected " << bnk_cardinality(n, k);
              return os.str();
            }))
          return;
      }
    }
  }));
  out.push_back(Check(s, "B_{n,k} = A_n for k in {n-1, n, n+1}").run([&](Check& c) {
    for (std::size_t n = 1; n <= std::max<std::size_t>(b.nmax, 10); ++n)
      for (std::size_t k = n - 1; k <= n + 1; ++k) {
        IntPoly r = bnk_recurrence(n, k).poly;
        IntPoly f = bnk_closedform(n, k).poly;
        IntPoly a = eulerian_poly(static_cast<unsigned>(n));
        if (!c.expect(r == a && f == a, [&] {
              return nk(n, k) + ": rec " + coeffs_of(r) + " closed " + coeffs_of(f) + " A_n " + coeffs_of(a);
            }))
          return;
      }
  }));
  out.push_back(Check(s, "B_{n,2}, B_{n,3} are every 3rd / 4th coefficient of the stated products").run(
      [&](Check& c) {
        const IntPoly p2{1, 0, 1};
        const IntPoly p3{1, 0, 1, 2, 1, 0, 1};
        for (std::size_t n = 2; n <= b.nmax; ++n) {
          IntPoly lhs2 = multisect(p2 * pow(geometric(2), static_cast<unsigned>(n - 1)), 3);
          IntPoly lhs3 = multisect(p3 * pow(geometric(3), static_cast<unsigned>(n - 2)), 4);
          IntPoly r2 = bnk_recurrence(n, 2).poly;
          IntPoly r3 = bnk_recurrence(n, 3).poly;
          if (!c.expect(lhs2 == r2 && lhs3 == r3, [&] {
                return "n=" + std::to_string(n) + ": k=2 " + coeffs_of(lhs2) + " vs " + coeffs_of(r2) + "; k=3 " +
                       coeffs_of(lhs3) + " vs " + coeffs_of(r3);
              }))
            return;
        }
      }));
  out.push_back(Check(s, "b_{n,1}(d) = C(n, 2d) for n <= 20").run([&](Check& c) {
    auto table = bnk_recurrence_table(big, 1);
    for (std::size_t n = 0; n <= big; ++n) {
      std::vector<Integer> expected;
      for (unsigned d = 0; 2 * d <= n; ++d) expected.push_back(binomial(static_cast<unsigned>(n), 2 * d));
      IntPoly want(std::move(expected));
      if (!c.expect(table[n] == want, [&] {
            return "n=" + std::to_string(n) + ": " + coeffs_of(table[n]) + " vs " + coeffs_of(want);
          }))
        return;
    }
  }));
  out.push_back(Check(s, "generating-function series equals the recurrence; convolution residual vanishes")
                    .run([&](Check& c) {
                      const std::size_t order = std::max<std::size_t>(12, b.nmax);
                      for (std::size_t k = 0; k <= std::min<std::size_t>(b.kmax, 5); ++k) {
                        auto gf = build_gf(k);
                        auto series = series_coefficients(gf, order);
                        auto table = bnk_recurrence_table(order, k);
                        auto residual = convolution_residual(gf, series);
                        for (std::size_t n = 0; n <= order; ++n)
                          if (!c.expect(series[n] == table[n] && residual[n].is_zero(), [&] {
                                return nk(n, k) + ": series " + coeffs_of(series[n]) + " rec " +
                                       coeffs_of(table[n]) + " residual " + coeffs_of(residual[n]);
                              }))
                            return;
                      }
                    }));
}

// structure

void structure(const VerifyBounds& b, std::vector<CheckResult>& out) {
  const Suite s = Suite::Structure;
  out.push_back(Check(s, "P_k has degree k^2, constant term 1, and is symmetric and unimodal").run([&](Check& c) {
    for (std::size_t k = 0; k <= b.kmax; ++k) {
      IntPoly p = p_poly(k).poly;
      if (!c.expect(p.degree() == k * k && p.coeff(0) == 1 && is_symmetric(p) && is_unimodal(p),
                    [&] { return "k=" + std::to_string(k) + ": P_k = " + coeffs_of(p); }))
        return;
    }
  }));
  out.push_back(Check(s, "P_k by formula = stretch recursion = duplicate insertion").run([&](Check& c) {
    for (std::size_t k = 1; k <= b.kmax; ++k) {
      IntPoly f = p_poly(k).poly;
      IntPoly st = p_poly_via_stretch(k).poly;
      IntPoly du = p_poly_via_duplication(k).poly;
      if (!c.expect(f == st && st == du, [&] {
            return "k=" + std::to_string(k) + ": formula " + coeffs_of(f) + " stretch " + coeffs_of(st) +
                   " duplication " + coeffs_of(du);
          }))
        return;
    }
  }));
  out.push_back(Check(s, "stretch(P_k) equals the u^{k+2} formula and has degree k^2 + k").run([&](Check& c) {
    for (std::size_t k = 1; k <= b.kmax; ++k) {
      IntPoly st = stretch(p_poly(k));
      IntPoly f = pp_poly_formula(k);
      if (!c.expect(st == f && st.degree() == k * k + k, [&] {
            return "k=" + std::to_string(k) + ": stretch " + coeffs_of(st) + " formula " + coeffs_of(f);
          }))
        return;
    }
  }));
  out.push_back(Check(s, "P_{k+1} = stretch(P_k) (1 + u + ... + u^{k+1})").run([&](Check& c) {
    for (std::size_t k = 1; k < b.kmax; ++k) {
      IntPoly lhs = p_poly(k + 1).poly;
      IntPoly rhs = stretch(p_poly(k)) * geometric(k + 1);
      if (!c.expect(lhs == rhs, [&] {
            return "k=" + std::to_string(k) + ": " + coeffs_of(lhs) + " vs " + coeffs_of(rhs);
          }))
        return;
    }
  }));
  out.push_back(Check(s, "multisect(P_k, k+1) = A_k").run([&](Check& c) {
    for (std::size_t k = 0; k <= b.kmax; ++k) {
      IntPoly m = multisect(p_poly(k).poly, k + 1);
      IntPoly a = eulerian_poly(static_cast<unsigned>(k));
      if (!c.expect(m == a, [&] { return "k=" + std::to_string(k) + ": " + coeffs_of(m) + " vs " + coeffs_of(a); }))
        return;
    }
  }));
}

// bijections

void bijections(const VerifyBounds& b, std::vector<CheckResult>& out) {
  const Suite s = Suite::Bijections;
  out.push_back(Check(s, "worked examples of st, st^{-1}, t_n, f and g").run([&](Check& c) {
    const std::vector<int> w{1, 9, 4, 5, 2};
    c.expect(standardize(w) == Permutation::parse("15342"), [] { return "st(19452) != 15342"; });
    const std::vector<int> ground{1, 2, 4, 5, 9};
    c.expect(unstandardize(Permutation::parse("15342"), ground) == w, [] { return "st^-1(15342) != 19452"; });
    DescentSetSpec spec(9, {3, 7, 8});
    c.expect(tail_length(spec) == 2, [] { return "t_9({3,7,8}) != 2"; });
    auto split = bijection_f(Permutation::parse("138425976"), spec);
    c.expect(split.sigma == Permutation::parse("136425") && split.tail == std::vector<int>{6, 7, 9},
             [&] { return "f(138425976) = (" + split.sigma.to_string() + ", " + set_of(split.tail) + ")"; });
    const std::vector<int> x{4, 6, 7};
    auto joined = bijection_g(Permutation::parse("3142"), x);
    c.expect(joined == Permutation::parse("3152764"), [&] { return "g(3142,{4,6,7}) = " + joined.to_string(); });
  }));
  out.push_back(Check(s, "st and st^{-1} preserve descent sets").run([&](Check& c) {
    for (std::size_t n = 1; n <= std::min<std::size_t>(b.nmax, 7); ++n)
      for_each_sn(n, [&](const Permutation& p) {
        if (c.failed()) return;
        std::vector<int> ground;
        for (std::size_t i = 0; i < n; ++i) ground.push_back(static_cast<int>(3 * i + 2));
        auto lifted = unstandardize(p, ground);
        c.expect(descent_set(lifted) == descent_set(p) && standardize(lifted) == p,
                 [&] { return "p=" + p.to_string(); });
      });
  }));
  out.push_back(Check(s, "g(f(pi)) = pi with f(pi) in the stated product set").run([&](Check& c) {
    for (std::size_t n = 1; n <= b.nmax; ++n)
      for_each_sn(n, [&](const Permutation& p) {
        if (c.failed()) return;
        const auto k = static_cast<std::size_t>(maxdrop(p));
        for (const auto& subset : subsets_of(descent_set(p))) {
          DescentSetSpec spec(n, subset);
          const std::size_t i = tail_length(spec);
          auto split = bijection_f(p, spec);
          bool in_domain = split.sigma.size() == n - i - 1 &&
                           static_cast<std::size_t>(maxdrop(split.sigma)) <= k && split.tail.size() == i + 1 &&
                           split.tail.front() >= static_cast<int>(n) - static_cast<int>(k);
          auto sigma_des = descent_set(split.sigma);
          for (int pos : subset)
            if (static_cast<std::size_t>(pos) + i + 2 <= n &&
                !std::binary_search(sigma_des.begin(), sigma_des.end(), pos))
              in_domain = false;
          auto back = bijection_g(split.sigma, split.tail);
          if (!c.expect(in_domain && back == p, [&] {
                return "pi=" + p.to_string() + " S=" + set_of(subset) + ": f = (" + split.sigma.to_string() + ", " +
                       set_of(split.tail) + "), g(f) = " + back.to_string();
              }))
            return;
        }
      });
  }));
  out.push_back(Check(s, "f(g(sigma, X)) = (sigma, X) over A_{m,k}(T) x C([m+i+1-k, m+i+1], i+1)")
                    .run([&](Check& c) {
                      for (std::size_t total = 1; total <= b.nmax; ++total)
                        for (std::size_t i = 0; i < total; ++i) {
                          const std::size_t m = total - i - 1;
                          for (std::size_t k = 0; k < total; ++k) {
                            auto tails = k_subsets(static_cast<int>(total - k), static_cast<int>(total), i + 1);
                            for (const auto& sigma : enumerate_bnk(m, k)) {
                              std::vector<int> spec_set = descent_set(sigma);
                              for (std::size_t t = m + 1; t <= m + i; ++t) spec_set.push_back(static_cast<int>(t));
                              DescentSetSpec spec(total, spec_set);
                              for (const auto& x : tails) {
                                auto joined = bijection_g(sigma, x);
                                auto split = bijection_f(joined, spec);
                                if (!c.expect(split.sigma == sigma && split.tail == x &&
                                                  static_cast<std::size_t>(maxdrop(joined)) <= k,
                                              [&] {
                                                return "sigma=" + sigma.to_string() + " X=" + set_of(x) +
                                                       " k=" + std::to_string(k) + ": g = " + joined.to_string();
                                              }))
                                  return;
                              }
                            }
                          }
                        }
                    }));
  out.push_back(Check(s, "a_{n,k}(S) recurrence matches brute-force counts").run([&](Check& c) {
    for (std::size_t n = 0; n <= b.nmax; ++n)
      for (std::size_t k = 0; k <= n + 1; ++k) {
        // brute counts for every S at once, keyed by bitmask over [1, n-1]
        std::map<unsigned, Integer> brute;
        BnkEnumerator it(n, k);
        std::vector<int> values;
        while (it.next(values)) {
          unsigned des_mask = 0;
          for (std::size_t pos = 1; pos < n; ++pos)
            if (values[pos - 1] > values[pos]) des_mask |= 1u << (pos - 1);
          for (unsigned sub = des_mask;; sub = (sub - 1) & des_mask) {
            brute[sub] += 1;
            if (sub == 0) break;
          }
        }
        const unsigned full = n == 0 ? 1u : 1u << (n - 1);
        for (unsigned mask = 0; mask < full; ++mask) {
          std::vector<int> subset;
          for (std::size_t pos = 1; pos < n; ++pos)
            if (mask >> (pos - 1) & 1u) subset.push_back(static_cast<int>(pos));
          DescentSetSpec spec(n, subset);
          Integer rec = count_ank(n, k, spec, CountStrategy::Recurrence);
          Integer want = brute.count(mask) ? brute[mask] : Integer(0);
          if (!c.expect(rec == want, [&] {
                std::ostringstream os;
                os << nk(n, k) << " S=" << set_of(subset) << ": recurrence " << rec << ", brute " << want;
                return os.str();
              }))
            return;
        }
      }
  }));
}

// juggling and sorting

void juggling(const VerifyBounds& b, std::vector<CheckResult>& out) {
  const Suite s = Suite::Juggling;
  out.push_back(Check(s, "bsc(pi) = maxdrop(pi) on S_n").run([&](Check& c) {
    for (std::size_t n = 0; n <= b.nmax; ++n)
      for_each_sn(n, [&](const Permutation& p) {
        if (c.failed()) return;
        c.expect(bsc(p) == static_cast<std::size_t>(maxdrop(p)), [&] { return "pi=" + p.to_string(); });
      });
  }));
  out.push_back(Check(s, "bsort maps B_{n,k} into B_{n,k-1}").run([&](Check& c) {
    for (std::size_t n = 0; n <= b.nmax; ++n)
      for_each_sn(n, [&](const Permutation& p) {
        if (c.failed() || p.is_identity()) return;
        auto q = bsort_pass(p);
        c.expect(maxdrop(q) <= maxdrop(p) - 1, [&] { return "pi=" + p.to_string() + " bsort=" + q.to_string(); });
      });
  }));
  out.push_back(Check(s, "bsort^m(pi) = id implies ssort^m(pi) = id").run([&](Check& c) {
    for (std::size_t n = 0; n <= b.nmax; ++n)
      for_each_sn(n, [&](const Permutation& p) {
        if (c.failed()) return;
        const std::size_t m = bsc(p);
        Permutation q = p;
        for (std::size_t t = 0; t < m; ++t) q = ssort(q);
        c.expect(q.is_identity(), [&] {
          return "pi=" + p.to_string() + " bsc=" + std::to_string(m) + " ssort^m=" + q.to_string();
        });
      });
  }));
  out.push_back(Check(s, "phi(pi, k) is a valid juggling sequence with k balls, injective on B_{n,k}")
                    .run([&](Check& c) {
                      for (std::size_t n = 1; n <= b.nmax; ++n)
                        for (std::size_t k = 0; k < n; ++k) {
                          std::set<std::vector<std::int64_t>> images;
                          for (const auto& p : enumerate_bnk(n, k)) {
                            auto t = phi(p, k);
                            bool fresh = images.emplace(t.throws().begin(), t.throws().end()).second;
                            if (!c.expect(is_valid(t) && ball_count(t) == static_cast<std::int64_t>(k) && fresh,
                                          [&] { return nk(n, k) + " pi=" + p.to_string() + " phi=" + t.to_string(); }))
                              return;
                          }
                        }
                    }));
  out.push_back(Check(s, "f_k(phi(pi, k)) = phi(bsort(pi), k-1)").run([&](Check& c) {
    for (std::size_t n = 1; n <= b.nmax; ++n)
      for (std::size_t k = 1; k < n; ++k)
        for (const auto& p : enumerate_bnk(n, k)) {
          auto lhs = fk_transform(phi(p, k));
          auto rhs = phi(bsort_pass(p), k - 1);
          if (!c.expect(lhs == rhs, [&] {
                return nk(n, k) + " pi=" + p.to_string() + ": f_k = " + lhs.to_string() + ", phi(bsort) = " +
                       rhs.to_string();
              }))
            return;
        }
  }));
  out.push_back(Check(s, "T = (3,5,0,2,0) is a juggling sequence with 2 balls").run([&](Check& c) {
    JugglingSequence t{3, 5, 0, 2, 0};
    c.expect(is_valid(t) && ball_count(t) == 2, [] { return "rejected"; });
  }));
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyBounds& bounds) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Identities) identities(bounds, out);
  if (all || suite == Suite::Routes) routes(bounds, out);
  if (all || suite == Suite::Structure) structure(bounds, out);
  if (all || suite == Suite::Bijections) bijections(bounds, out);
  if (all || suite == Suite::Juggling) juggling(bounds, out);
  return out;
}

}  // namespace descpoly
