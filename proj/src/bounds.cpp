#include "unicyclic/bounds.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "unicyclic/errors.hpp"
#include "unicyclic/text.hpp"

namespace unicyclic {

namespace {

using Formula = std::function<IndexValue(const Cell&, const BoundParam&)>;
using ParamCheck = std::function<std::optional<std::string>(const BoundParam&)>;

IndexValue V(long long x) { return IndexValue(x); }
IndexValue ratio(long long num, long long den) { return IndexValue(BigRational(num, den)); }
IndexValue pw(long long base, double exponent) { return power_value(base, exponent); }
IndexValue ipow(long long base, long long exponent) { return power_value(base, static_cast<double>(exponent)); }
IndexValue apow(double a, long long exponent) { return real_power_value(a, exponent); }

double alpha_of(const BoundParam& p) { return std::get<Alpha>(p).value; }
double base_of(const BoundParam& p) { return std::get<ExpBase>(p).value; }

// ---- parameter ranges -----------------------------------------------------

std::optional<std::string> no_param(const BoundParam& p) {
  if (!std::holds_alternative<std::monostate>(p)) return "this bound takes no parameter";
  return std::nullopt;
}

ParamCheck alpha_in(Convexity regime) {
  return [regime](const BoundParam& p) -> std::optional<std::string> {
    if (!std::holds_alternative<Alpha>(p)) return "parameter alpha required";
    const double a = alpha_of(p);
    if (regime == Convexity::strictly_convex && !(a < 0.0 || a > 1.0)) return "alpha in (-inf,0) U (1,inf)";
    if (regime == Convexity::strictly_concave && !(a > 0.0 && a < 1.0)) return "alpha in (0,1)";
    return std::nullopt;
  };
}

// t a^t is strictly convex on [floor, inf) for a > 1 or a <= e^(-2/floor).
ParamCheck sei_base(int floor) {
  return [floor](const BoundParam& p) -> std::optional<std::string> {
    if (!std::holds_alternative<ExpBase>(p)) return "parameter a required";
    const double a = base_of(p);
    const double edge = std::exp(-2.0 / floor);
    if (a > 1.0 || (a > 0.0 && a <= edge)) return std::nullopt;
    return floor == 1 ? "a > 1 or 0 < a <= e^-2" : "a > 1 or 0 < a <= e^-1";
  };
}

ParamCheck function_in(Convexity regime, Mode mode, int floor) {
  return [=](const BoundParam& p) -> std::optional<std::string> {
    if (!std::holds_alternative<FunctionSpec>(p)) return "function parameter required";
    const auto f = std::get<FunctionSpec>(p).with_floor(floor);
    if (schur_class(f, mode) == regime) return std::nullopt;
    const std::string what = mode == Mode::additive ? "f" : "log f";
    return what + (regime == Convexity::strictly_convex ? " convex" : " concave") + " on [" +
           std::to_string(floor) + ",inf)";
  };
}

// ---- extremal degree multisets as (count, degree) runs ----------------------

using Runs = std::vector<std::pair<long long, long long>>;

Runs cycle_runs(const Cell& c) { return {{c.n, 2}}; }
Runs un3_runs(const Cell& c) { return {{1, c.n - 1}, {2, 2}, {c.n - 3, 1}}; }
Runs h_runs(const Cell& c) {
  const int d = *c.max_degree;
  return {{1, d}, {c.n - d + 1, 2}, {d - 2, 1}};
}
Runs k_runs(const Cell& c) {
  const int d = *c.max_degree;
  const auto dq = delta_quantities(c.n, d);
  if (dq.two_hub_case) return {{1, d}, {1, c.n - d + 1}, {1, 2}, {c.n - 3, 1}};
  return {{dq.q, d}, {1, c.n - dq.q * (d - 1) + 1}, {c.n - dq.q - 1, 1}};
}
Runs a_runs(const Cell& c) {
  const int p = *c.pendants;
  const auto pq = pendant_quantities(c.n, p);
  return {{pq.t, pq.m + 1}, {c.n - p - pq.t, pq.m}, {p, 1}};
}
Runs b_runs(const Cell& c) {
  const int p = *c.pendants;
  return {{1, p + 2}, {c.n - p - 1, 2}, {p, 1}};
}

Runs runs_for(SharpFamily fam, const Cell& c) {
  switch (fam) {
    case SharpFamily::cycle: return cycle_runs(c);
    case SharpFamily::un_three: return un3_runs(c);
    case SharpFamily::H: return h_runs(c);
    case SharpFamily::K: return k_runs(c);
    case SharpFamily::seq_a: return a_runs(c);
    case SharpFamily::seq_b: return b_runs(c);
  }
  return {};
}

// f(d1) + ... written as sum count * f(d) or prod f(d)^count.
Formula generic_formula(SharpFamily fam, Mode mode) {
  return [=](const Cell& c, const BoundParam& p) {
    const auto& f = std::get<FunctionSpec>(p);
    IndexValue acc = mode == Mode::additive ? V(0) : V(1);
    for (const auto& [count, degree] : runs_for(fam, c)) {
      if (count == 0) continue;
      const IndexValue term = f.apply(static_cast<int>(degree), mode);
      if (mode == Mode::additive) {
        acc += V(count) * term;
      } else {
        acc *= term.pow(static_cast<unsigned>(count));
      }
    }
    return acc;
  };
}

// Closed forms shared by the pendant-restricted instantiations.
struct Pend {
  long long n, p, m, t;
};
Pend pend(const Cell& c) {
  const auto pq = pendant_quantities(c.n, *c.pendants);
  return {c.n, *c.pendants, pq.m, pq.t};
}

struct Delta {
  long long n, d, q, r, s;
  bool two_hub;
};
Delta delta(const Cell& c) {
  const auto dq = delta_quantities(c.n, *c.max_degree);
  return {c.n, *c.max_degree, dq.q, dq.r, dq.s, dq.two_hub_case};
}

// ---- catalog construction --------------------------------------------------

struct Entry {
  const char* id;
  BoundIndex index;
  Convexity regime;
  Side side;
  Restriction restriction;
  Sharpness sharpness;
  SharpFamily sharp_at;
  const char* source;
  ParamCheck check;
  Formula formula;
};

std::vector<BoundSpec> build_catalog() {
  constexpr auto convex = Convexity::strictly_convex;
  constexpr auto concave = Convexity::strictly_concave;
  constexpr auto lower = Side::lower;
  constexpr auto upper = Side::upper;
  constexpr auto none = Restriction::none;
  constexpr auto by_delta = Restriction::max_degree;
  constexpr auto by_pend = Restriction::pendants;
  constexpr auto iff = Sharpness::iff;
  constexpr auto attained = Sharpness::attained;
  using SF = SharpFamily;
  using BI = BoundIndex;
  constexpr auto add = Mode::additive;
  constexpr auto mul = Mode::multiplicative;

  std::vector<Entry> entries = {
      // -- unrestricted, generic --------------------------------------------
      {"thm-If-convex-uni-lower", BI::I_f, convex, lower, none, attained, SF::cycle, "I_f convex: nf(2) <= I_f",
       function_in(convex, add, 1), generic_formula(SF::cycle, add)},
      {"thm-If-convex-uni-upper", BI::I_f, convex, upper, none, attained, SF::un_three,
       "I_f convex: I_f <= f(n-1)+2f(2)+(n-3)f(1)", function_in(convex, add, 1),
       generic_formula(SF::un_three, add)},
      {"thm-If-concave-uni-lower", BI::I_f, concave, lower, none, attained, SF::un_three,
       "I_f concave: f(n-1)+2f(2)+(n-3)f(1) <= I_f", function_in(concave, add, 1),
       generic_formula(SF::un_three, add)},
      {"thm-If-concave-uni-upper", BI::I_f, concave, upper, none, attained, SF::cycle, "I_f concave: I_f <= nf(2)",
       function_in(concave, add, 1), generic_formula(SF::cycle, add)},
      {"thm-IIf-logconvex-uni-lower", BI::II_f, convex, lower, none, attained, SF::cycle,
       "II_f log-convex: f(2)^n <= II_f", function_in(convex, mul, 1), generic_formula(SF::cycle, mul)},
      {"thm-IIf-logconvex-uni-upper", BI::II_f, convex, upper, none, attained, SF::un_three,
       "II_f log-convex: II_f <= f(n-1)f(2)^2f(1)^(n-3)", function_in(convex, mul, 1),
       generic_formula(SF::un_three, mul)},
      {"thm-IIf-logconcave-uni-lower", BI::II_f, concave, lower, none, attained, SF::un_three,
       "II_f log-concave: f(n-1)f(2)^2f(1)^(n-3) <= II_f", function_in(concave, mul, 1),
       generic_formula(SF::un_three, mul)},
      {"thm-IIf-logconcave-uni-upper", BI::II_f, concave, upper, none, attained, SF::cycle,
       "II_f log-concave: II_f <= f(2)^n", function_in(concave, mul, 1), generic_formula(SF::cycle, mul)},

      // -- unrestricted, named ----------------------------------------------
      {"thm-M1a-convex-uni-lower", BI::M1_alpha, convex, lower, none, iff, SF::cycle, "n2^a <= M1^a",
       alpha_in(convex), [](const Cell& c, const BoundParam& p) { return V(c.n) * pw(2, alpha_of(p)); }},
      {"thm-M1a-convex-uni-upper", BI::M1_alpha, convex, upper, none, iff, SF::un_three,
       "M1^a <= (n-1)^a+2^(a+1)+n-3", alpha_in(convex),
       [](const Cell& c, const BoundParam& p) {
         const double a = alpha_of(p);
         return pw(c.n - 1, a) + pw(2, a + 1) + V(c.n - 3);
       }},
      {"thm-M1a-concave-uni-lower", BI::M1_alpha, concave, lower, none, iff, SF::un_three,
       "(n-1)^a+2^(a+1)+n-3 <= M1^a, a in (0,1)", alpha_in(concave),
       [](const Cell& c, const BoundParam& p) {
         const double a = alpha_of(p);
         return pw(c.n - 1, a) + pw(2, a + 1) + V(c.n - 3);
       }},
      {"thm-M1a-concave-uni-upper", BI::M1_alpha, concave, upper, none, iff, SF::cycle,
       "M1^a <= n2^a, a in (0,1)", alpha_in(concave),
       [](const Cell& c, const BoundParam& p) { return V(c.n) * pw(2, alpha_of(p)); }},
      {"cor-M1-uni-lower", BI::M1, convex, lower, none, iff, SF::cycle, "4n <= M1", no_param,
       [](const Cell& c, const BoundParam&) { return V(4LL * c.n); }},
      {"cor-M1-uni-upper", BI::M1, convex, upper, none, iff, SF::un_three, "M1 <= n^2-n+6", no_param,
       [](const Cell& c, const BoundParam&) { return V(1LL * c.n * c.n - c.n + 6); }},
      {"cor-F-uni-lower", BI::F, convex, lower, none, iff, SF::cycle, "8n <= F", no_param,
       [](const Cell& c, const BoundParam&) { return V(8LL * c.n); }},
      {"cor-F-uni-upper", BI::F, convex, upper, none, iff, SF::un_three, "F <= (n-1)^3+n+13", no_param,
       [](const Cell& c, const BoundParam&) { return ipow(c.n - 1, 3) + V(c.n + 13); }},
      {"cor-ID-uni-lower", BI::ID, convex, lower, none, iff, SF::cycle, "n/2 <= ID", no_param,
       [](const Cell& c, const BoundParam&) { return ratio(c.n, 2); }},
      {"cor-ID-uni-upper", BI::ID, convex, upper, none, iff, SF::un_three, "ID <= 1/(n-1)+n-2", no_param,
       [](const Cell& c, const BoundParam&) { return ratio(1, c.n - 1) + V(c.n - 2); }},
      {"thm-SEI-uni-lower", BI::SEI, convex, lower, none, iff, SF::cycle, "n2a^2 <= SEI_a", sei_base(1),
       [](const Cell& c, const BoundParam& p) { return V(2LL * c.n) * apow(base_of(p), 2); }},
      {"thm-SEI-uni-upper", BI::SEI, convex, upper, none, iff, SF::un_three,
       "SEI_a <= (n-1)a^(n-1)+4a^2+(n-3)a", sei_base(1),
       [](const Cell& c, const BoundParam& p) {
         const double a = base_of(p);
         return V(c.n - 1) * apow(a, c.n - 1) + V(4) * apow(a, 2) + V(c.n - 3) * apow(a, 1);
       }},
      {"thm-NKstar-uni-lower", BI::NK_star, convex, lower, none, iff, SF::cycle, "4^n <= NK*", no_param,
       [](const Cell& c, const BoundParam&) { return ipow(4, c.n); }},
      {"thm-NKstar-uni-upper", BI::NK_star, convex, upper, none, iff, SF::un_three, "NK* <= 16(n-1)^(n-1)",
       no_param, [](const Cell& c, const BoundParam&) { return V(16) * ipow(c.n - 1, c.n - 1); }},
      {"thm-NK-uni-lower", BI::NK, concave, lower, none, iff, SF::un_three, "4(n-1) <= NK", no_param,
       [](const Cell& c, const BoundParam&) { return V(4LL * (c.n - 1)); }},
      {"thm-NK-uni-upper", BI::NK, concave, upper, none, iff, SF::cycle, "NK <= 2^n", no_param,
       [](const Cell& c, const BoundParam&) { return ipow(2, c.n); }},

      // -- maximum degree Delta, generic --------------------------------------
      {"thm-If-convex-Delta-lower", BI::I_f, convex, lower, by_delta, attained, SF::H,
       "I_f >= f(D)+(n-D+1)f(2)+(D-2)f(1)", function_in(convex, add, 1), generic_formula(SF::H, add)},
      {"thm-If-convex-Delta-upper", BI::I_f, convex, upper, by_delta, attained, SF::K,
       "I_f <= qf(D)+f(n-q(D-1)+1)+(n-q-1)f(1) (two cases)", function_in(convex, add, 1),
       generic_formula(SF::K, add)},
      {"thm-If-concave-Delta-lower", BI::I_f, concave, lower, by_delta, attained, SF::K,
       "I_f >= qf(D)+f(n-q(D-1)+1)+(n-q-1)f(1), f concave (two cases)", function_in(concave, add, 1),
       generic_formula(SF::K, add)},
      {"thm-If-concave-Delta-upper", BI::I_f, concave, upper, by_delta, attained, SF::H,
       "I_f <= f(D)+(n-D+1)f(2)+(D-2)f(1), f concave", function_in(concave, add, 1),
       generic_formula(SF::H, add)},
      {"thm-IIf-logconvex-Delta-lower", BI::II_f, convex, lower, by_delta, attained, SF::H,
       "II_f >= f(D)f(2)^(n-D+1)f(1)^(D-2)", function_in(convex, mul, 1), generic_formula(SF::H, mul)},
      {"thm-IIf-logconvex-Delta-upper", BI::II_f, convex, upper, by_delta, attained, SF::K,
       "II_f <= f(D)^q f(n-q(D-1)+1) f(1)^(n-q-1) (two cases)", function_in(convex, mul, 1),
       generic_formula(SF::K, mul)},
      {"thm-IIf-logconcave-Delta-lower", BI::II_f, concave, lower, by_delta, attained, SF::K,
       "II_f >= f(D)^q f(n-q(D-1)+1) f(1)^(n-q-1), log f concave (two cases)", function_in(concave, mul, 1),
       generic_formula(SF::K, mul)},
      {"thm-IIf-logconcave-Delta-upper", BI::II_f, concave, upper, by_delta, attained, SF::H,
       "II_f <= f(D)f(2)^(n-D+1)f(1)^(D-2), log f concave", function_in(concave, mul, 1),
       generic_formula(SF::H, mul)},

      // -- maximum degree Delta, named ----------------------------------------
      {"thm-M1a-convex-Delta-lower", BI::M1_alpha, convex, lower, by_delta, iff, SF::H,
       "M1^a >= D^a+(n-D+1)2^a+D-2", alpha_in(convex),
       [](const Cell& c, const BoundParam& p) {
         const auto d = delta(c);
         const double a = alpha_of(p);
         return pw(d.d, a) + V(d.n - d.d + 1) * pw(2, a) + V(d.d - 2);
       }},
      {"thm-M1a-convex-Delta-upper", BI::M1_alpha, convex, upper, by_delta, iff, SF::K,
       "M1^a <= qD^a+(n-q(D-1)+1)^a+n-q-1 (two cases)", alpha_in(convex),
       [](const Cell& c, const BoundParam& p) {
         const auto d = delta(c);
         const double a = alpha_of(p);
         if (d.two_hub) return pw(d.d, a) + pw(d.n - d.d + 1, a) + pw(2, a) + V(d.n - 3);
         return V(d.q) * pw(d.d, a) + pw(d.n - d.q * (d.d - 1) + 1, a) + V(d.n - d.q - 1);
       }},
      {"thm-M1a-concave-Delta-lower", BI::M1_alpha, concave, lower, by_delta, iff, SF::K,
       "M1^a >= qD^a+(n-q(D-1)+1)^a+n-q-1, a in (0,1) (two cases)", alpha_in(concave),
       [](const Cell& c, const BoundParam& p) {
         const auto d = delta(c);
         const double a = alpha_of(p);
         if (d.two_hub) return pw(d.d, a) + pw(d.n - d.d + 1, a) + pw(2, a) + V(d.n - 3);
         return V(d.q) * pw(d.d, a) + pw(d.n - d.q * (d.d - 1) + 1, a) + V(d.n - d.q - 1);
       }},
      {"thm-M1a-concave-Delta-upper", BI::M1_alpha, concave, upper, by_delta, iff, SF::H,
       "M1^a <= D^a+(n-D+1)2^a+D-2, a in (0,1)", alpha_in(concave),
       [](const Cell& c, const BoundParam& p) {
         const auto d = delta(c);
         const double a = alpha_of(p);
         return pw(d.d, a) + V(d.n - d.d + 1) * pw(2, a) + V(d.d - 2);
       }},
      {"cor-M1-Delta-lower", BI::M1, convex, lower, by_delta, iff, SF::H, "M1 >= D^2+4n-3D+2", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         return V(d.d * d.d + 4 * d.n - 3 * d.d + 2);
       }},
      {"cor-F-Delta-lower", BI::F, convex, lower, by_delta, iff, SF::H, "F >= D^3+8n-7D+6", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         return V(d.d * d.d * d.d + 8 * d.n - 7 * d.d + 6);
       }},
      {"cor-ID-Delta-lower", BI::ID, convex, lower, by_delta, iff, SF::H, "ID >= 1/D+(n+D-3)/2", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         return ratio(1, d.d) + ratio(d.n + d.d - 3, 2);
       }},
      {"cor-M1-Delta-upper", BI::M1, convex, upper, by_delta, iff, SF::K,
       "M1 <= D^2+(n-D+1)^2+n+1 | qD^2+(n-q(D-1)+1)^2+n-q-1", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         if (d.two_hub) return V(d.d * d.d + (d.n - d.d + 1) * (d.n - d.d + 1) + d.n + 1);
         const long long r = d.n - d.q * (d.d - 1) + 1;
         return V(d.q * d.d * d.d + r * r + d.n - d.q - 1);
       }},
      {"cor-F-Delta-upper", BI::F, convex, upper, by_delta, iff, SF::K,
       "F <= D^3+(n-D+1)^3+n+5 | qD^3+(n-q(D-1)+1)^3+n-q-1", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         if (d.two_hub) return ipow(d.d, 3) + ipow(d.n - d.d + 1, 3) + V(d.n + 5);
         return V(d.q) * ipow(d.d, 3) + ipow(d.n - d.q * (d.d - 1) + 1, 3) + V(d.n - d.q - 1);
       }},
      {"cor-ID-Delta-upper", BI::ID, convex, upper, by_delta, iff, SF::K,
       "ID <= 1/D+1/(n-D+1)+n-5/2 | q/D+1/(n-q(D-1)+1)+n-q-1", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         if (d.two_hub) return ratio(1, d.d) + ratio(1, d.n - d.d + 1) + ratio(2 * d.n - 5, 2);
         return ratio(d.q, d.d) + ratio(1, d.n - d.q * (d.d - 1) + 1) + V(d.n - d.q - 1);
       }},
      {"thm-SEI-Delta-lower", BI::SEI, convex, lower, by_delta, iff, SF::H, "SEI_a >= Da^D+(n-D+1)2a^2+(D-2)a",
       sei_base(1),
       [](const Cell& c, const BoundParam& p) {
         const auto d = delta(c);
         const double a = base_of(p);
         return V(d.d) * apow(a, d.d) + V(d.n - d.d + 1) * V(2) * apow(a, 2) + V(d.d - 2) * apow(a, 1);
       }},
      {"thm-SEI-Delta-upper", BI::SEI, convex, upper, by_delta, iff, SF::K,
       "SEI_a <= Da^D+(n-D+1)a^(n-D+1)+2a^2+(n-3)a | qDa^D+ra^r+(n-q-1)a", sei_base(1),
       [](const Cell& c, const BoundParam& p) {
         const auto d = delta(c);
         const double a = base_of(p);
         if (d.two_hub) {
           return V(d.d) * apow(a, d.d) + V(d.n - d.d + 1) * apow(a, d.n - d.d + 1) + V(2) * apow(a, 2) +
                  V(d.n - 3) * apow(a, 1);
         }
         const long long r = d.n - d.q * (d.d - 1) + 1;
         return V(d.q * d.d) * apow(a, d.d) + V(r) * apow(a, r) + V(d.n - d.q - 1) * apow(a, 1);
       }},
      {"thm-NKstar-Delta-lower", BI::NK_star, convex, lower, by_delta, iff, SF::H, "NK* >= D^D 4^(n-D+1)",
       no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         return ipow(d.d, d.d) * ipow(4, d.n - d.d + 1);
       }},
      {"thm-NKstar-Delta-upper", BI::NK_star, convex, upper, by_delta, iff, SF::K,
       "NK* <= 4D^D(n-D+1)^(n-D+1) | D^(qD)(n-q(D-1)+1)^(n-q(D-1)+1)", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         if (d.two_hub) return V(4) * ipow(d.d, d.d) * ipow(d.n - d.d + 1, d.n - d.d + 1);
         const long long r = d.n - d.q * (d.d - 1) + 1;
         return ipow(d.d, d.q * d.d) * ipow(r, r);
       }},
      {"thm-NK-Delta-lower", BI::NK, concave, lower, by_delta, iff, SF::K, "NK >= 2D(n-D+1) | D^q(n-q(D-1)+1)",
       no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         if (d.two_hub) return V(2 * d.d * (d.n - d.d + 1));
         return ipow(d.d, d.q) * V(d.n - d.q * (d.d - 1) + 1);
       }},
      {"thm-NK-Delta-upper", BI::NK, concave, upper, by_delta, iff, SF::H, "NK <= D 2^(n-D+1)", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto d = delta(c);
         return V(d.d) * ipow(2, d.n - d.d + 1);
       }},

      // -- p pendant vertices, generic (convexity on [2,inf)) ----------------
      {"thm-If-convex-pend-lower", BI::I_f, convex, lower, by_pend, attained, SF::seq_a,
       "tf(m+1)+(n-p-t)f(m)+pf(1) <= I_f", function_in(convex, add, 2), generic_formula(SF::seq_a, add)},
      {"thm-If-convex-pend-upper", BI::I_f, convex, upper, by_pend, attained, SF::seq_b,
       "I_f <= f(p+2)+(n-p-1)f(2)+pf(1)", function_in(convex, add, 2), generic_formula(SF::seq_b, add)},
      {"thm-If-concave-pend-lower", BI::I_f, concave, lower, by_pend, attained, SF::seq_b,
       "f(p+2)+(n-p-1)f(2)+pf(1) <= I_f, f concave", function_in(concave, add, 2),
       generic_formula(SF::seq_b, add)},
      {"thm-If-concave-pend-upper", BI::I_f, concave, upper, by_pend, attained, SF::seq_a,
       "I_f <= tf(m+1)+(n-p-t)f(m)+pf(1), f concave", function_in(concave, add, 2),
       generic_formula(SF::seq_a, add)},
      {"thm-IIf-logconvex-pend-lower", BI::II_f, convex, lower, by_pend, attained, SF::seq_a,
       "f(m+1)^t f(m)^(n-p-t) f(1)^p <= II_f", function_in(convex, mul, 2), generic_formula(SF::seq_a, mul)},
      {"thm-IIf-logconvex-pend-upper", BI::II_f, convex, upper, by_pend, attained, SF::seq_b,
       "II_f <= f(p+2)f(2)^(n-p-1)f(1)^p", function_in(convex, mul, 2), generic_formula(SF::seq_b, mul)},
      {"thm-IIf-logconcave-pend-lower", BI::II_f, concave, lower, by_pend, attained, SF::seq_b,
       "f(p+2)f(2)^(n-p-1)f(1)^p <= II_f, log f concave", function_in(concave, mul, 2),
       generic_formula(SF::seq_b, mul)},
      {"thm-IIf-logconcave-pend-upper", BI::II_f, concave, upper, by_pend, attained, SF::seq_a,
       "II_f <= f(m+1)^t f(m)^(n-p-t) f(1)^p, log f concave", function_in(concave, mul, 2),
       generic_formula(SF::seq_a, mul)},

      // -- p pendant vertices, named instantiations --------------------------
      {"thm-M1a-convex-pend-lower", BI::M1_alpha, convex, lower, by_pend, attained, SF::seq_a,
       "t(m+1)^a+(n-p-t)m^a+p <= M1^a", alpha_in(convex),
       [](const Cell& c, const BoundParam& p) {
         const auto s = pend(c);
         const double a = alpha_of(p);
         return V(s.t) * pw(s.m + 1, a) + V(s.n - s.p - s.t) * pw(s.m, a) + V(s.p);
       }},
      {"thm-M1a-convex-pend-upper", BI::M1_alpha, convex, upper, by_pend, attained, SF::seq_b,
       "M1^a <= (p+2)^a+(n-p-1)2^a+p", alpha_in(convex),
       [](const Cell& c, const BoundParam& p) {
         const auto s = pend(c);
         const double a = alpha_of(p);
         return pw(s.p + 2, a) + V(s.n - s.p - 1) * pw(2, a) + V(s.p);
       }},
      {"thm-M1a-concave-pend-lower", BI::M1_alpha, concave, lower, by_pend, attained, SF::seq_b,
       "(p+2)^a+(n-p-1)2^a+p <= M1^a, a in (0,1)", alpha_in(concave),
       [](const Cell& c, const BoundParam& p) {
         const auto s = pend(c);
         const double a = alpha_of(p);
         return pw(s.p + 2, a) + V(s.n - s.p - 1) * pw(2, a) + V(s.p);
       }},
      {"thm-M1a-concave-pend-upper", BI::M1_alpha, concave, upper, by_pend, attained, SF::seq_a,
       "M1^a <= t(m+1)^a+(n-p-t)m^a+p, a in (0,1)", alpha_in(concave),
       [](const Cell& c, const BoundParam& p) {
         const auto s = pend(c);
         const double a = alpha_of(p);
         return V(s.t) * pw(s.m + 1, a) + V(s.n - s.p - s.t) * pw(s.m, a) + V(s.p);
       }},
      {"cor-M1-pend-lower", BI::M1, convex, lower, by_pend, attained, SF::seq_a,
       "t(m+1)^2+(n-p-t)m^2+p <= M1", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return V(s.t * (s.m + 1) * (s.m + 1) + (s.n - s.p - s.t) * s.m * s.m + s.p);
       }},
      {"cor-M1-pend-upper", BI::M1, convex, upper, by_pend, attained, SF::seq_b,
       "M1 <= (p+2)^2+4(n-p-1)+p", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return V((s.p + 2) * (s.p + 2) + 4 * (s.n - s.p - 1) + s.p);
       }},
      {"cor-F-pend-lower", BI::F, convex, lower, by_pend, attained, SF::seq_a,
       "t(m+1)^3+(n-p-t)m^3+p <= F", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return V(s.t) * ipow(s.m + 1, 3) + V(s.n - s.p - s.t) * ipow(s.m, 3) + V(s.p);
       }},
      {"cor-F-pend-upper", BI::F, convex, upper, by_pend, attained, SF::seq_b,
       "F <= (p+2)^3+8(n-p-1)+p", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return ipow(s.p + 2, 3) + V(8 * (s.n - s.p - 1) + s.p);
       }},
      {"cor-ID-pend-lower", BI::ID, convex, lower, by_pend, attained, SF::seq_a,
       "t/(m+1)+(n-p-t)/m+p <= ID", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return ratio(s.t, s.m + 1) + ratio(s.n - s.p - s.t, s.m) + V(s.p);
       }},
      {"cor-ID-pend-upper", BI::ID, convex, upper, by_pend, attained, SF::seq_b,
       "ID <= 1/(p+2)+(n-p-1)/2+p", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return ratio(1, s.p + 2) + ratio(s.n - s.p - 1, 2) + V(s.p);
       }},
      {"thm-SEI-pend-lower", BI::SEI, convex, lower, by_pend, attained, SF::seq_a,
       "t(m+1)a^(m+1)+(n-p-t)ma^m+pa <= SEI_a", sei_base(2),
       [](const Cell& c, const BoundParam& p) {
         const auto s = pend(c);
         const double a = base_of(p);
         return V(s.t * (s.m + 1)) * apow(a, s.m + 1) + V((s.n - s.p - s.t) * s.m) * apow(a, s.m) +
                V(s.p) * apow(a, 1);
       }},
      {"thm-SEI-pend-upper", BI::SEI, convex, upper, by_pend, attained, SF::seq_b,
       "SEI_a <= (p+2)a^(p+2)+(n-p-1)2a^2+pa", sei_base(2),
       [](const Cell& c, const BoundParam& p) {
         const auto s = pend(c);
         const double a = base_of(p);
         return V(s.p + 2) * apow(a, s.p + 2) + V(2 * (s.n - s.p - 1)) * apow(a, 2) + V(s.p) * apow(a, 1);
       }},
      {"thm-NKstar-pend-lower", BI::NK_star, convex, lower, by_pend, attained, SF::seq_a,
       "(m+1)^((m+1)t) m^(m(n-p-t)) <= NK*", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return ipow(s.m + 1, (s.m + 1) * s.t) * ipow(s.m, s.m * (s.n - s.p - s.t));
       }},
      {"thm-NKstar-pend-upper", BI::NK_star, convex, upper, by_pend, attained, SF::seq_b,
       "NK* <= (p+2)^(p+2) 4^(n-p-1)", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return ipow(s.p + 2, s.p + 2) * ipow(4, s.n - s.p - 1);
       }},
      {"thm-NK-pend-lower", BI::NK, concave, lower, by_pend, attained, SF::seq_b,
       "(p+2)2^(n-p-1) <= NK", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return V(s.p + 2) * ipow(2, s.n - s.p - 1);
       }},
      {"thm-NK-pend-upper", BI::NK, concave, upper, by_pend, attained, SF::seq_a,
       "NK <= (m+1)^t m^(n-p-t)", no_param,
       [](const Cell& c, const BoundParam&) {
         const auto s = pend(c);
         return ipow(s.m + 1, s.t) * ipow(s.m, s.n - s.p - s.t);
       }},
  };

  std::vector<BoundSpec> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    out.push_back(BoundSpec{e.id, e.index, e.regime, e.side, e.restriction, e.sharpness, e.sharp_at,
                            e.restriction == Restriction::pendants ? 2 : 1, e.source, std::move(e.check),
                            std::move(e.formula)});
  }
  return out;
}

}  // namespace

std::string to_string(Side side) { return side == Side::lower ? "lower" : "upper"; }

std::string to_string(Restriction restriction) {
  switch (restriction) {
    case Restriction::none: return "unrestricted";
    case Restriction::max_degree: return "max_degree";
    case Restriction::pendants: return "pendants";
  }
  return "?";
}

std::string to_string(BoundIndex index) {
  switch (index) {
    case BoundIndex::I_f: return "I_f";
    case BoundIndex::II_f: return "II_f";
    case BoundIndex::M1_alpha: return "M1a";
    case BoundIndex::M1: return "M1";
    case BoundIndex::F: return "F";
    case BoundIndex::ID: return "ID";
    case BoundIndex::SEI: return "SEI";
    case BoundIndex::NK: return "NK";
    case BoundIndex::NK_star: return "NK*";
  }
  return "?";
}

std::string to_string(const BoundParam& param) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "-";
        if constexpr (std::is_same_v<T, Alpha>) return "alpha=" + format_real(p.value);
        if constexpr (std::is_same_v<T, ExpBase>) return "a=" + format_real(p.value);
        if constexpr (std::is_same_v<T, FunctionSpec>) return "f=" + p.to_string();
      },
      param);
}

ParamKind BoundSpec::param_kind() const {
  switch (index) {
    case BoundIndex::I_f:
    case BoundIndex::II_f: return ParamKind::function;
    case BoundIndex::M1_alpha: return ParamKind::alpha;
    case BoundIndex::SEI: return ParamKind::base;
    default: return ParamKind::none;
  }
}

Mode BoundSpec::mode() const {
  return index == BoundIndex::II_f || index == BoundIndex::NK || index == BoundIndex::NK_star ? Mode::multiplicative
                                                                                              : Mode::additive;
}

Objective BoundSpec::objective(const BoundParam& param) const {
  switch (index) {
    case BoundIndex::I_f: return GenericIndex{std::get<FunctionSpec>(param), Mode::additive};
    case BoundIndex::II_f: return GenericIndex{std::get<FunctionSpec>(param), Mode::multiplicative};
    case BoundIndex::M1_alpha: return IndexSpec::m1_alpha(std::get<Alpha>(param).value);
    case BoundIndex::M1: return IndexSpec::m1();
    case BoundIndex::F: return IndexSpec::f();
    case BoundIndex::ID: return IndexSpec::id();
    case BoundIndex::SEI: return IndexSpec::sei(std::get<ExpBase>(param).value);
    case BoundIndex::NK: return IndexSpec::nk();
    case BoundIndex::NK_star: return IndexSpec::nk_star();
  }
  throw ParameterError("unknown bound index");
}

ExtremalFamily BoundSpec::sharp_family(const Cell& cell) const {
  switch (sharp_at) {
    case SharpFamily::cycle: return family::Cycle{cell.n};
    case SharpFamily::un_three: return family::UnThree{cell.n};
    case SharpFamily::H: return family::H{cell.n, cell.max_degree.value()};
    case SharpFamily::K: return family::K{cell.n, cell.max_degree.value()};
    case SharpFamily::seq_a: return family::SeqA{cell.n, cell.pendants.value()};
    case SharpFamily::seq_b: return family::SeqB{cell.n, cell.pendants.value()};
  }
  throw ParameterError("unknown extremal family");
}

std::optional<std::string> BoundSpec::violation(const Cell& cell, const BoundParam& param) const {
  if (cell.n < 4) return "n >= 4";
  switch (restriction) {
    case Restriction::none: break;
    case Restriction::max_degree:
      if (!cell.max_degree) return "maximum degree Delta required";
      if (*cell.max_degree < 3 || *cell.max_degree > cell.n - 1) return "3 <= Delta <= n - 1";
      break;
    case Restriction::pendants:
      if (!cell.pendants) return "pendant count p required";
      if (*cell.pendants < 1 || *cell.pendants > cell.n - 3) return "1 <= p <= n - 3";
      break;
  }
  return param_violation(param);
}

const std::vector<BoundSpec>& catalog() {
  static const std::vector<BoundSpec> instance = build_catalog();
  return instance;
}

const BoundSpec& find_bound(std::string_view id) {
  for (const auto& b : catalog()) {
    if (b.id == id) return b;
  }
  throw ParameterError("unknown bound id '" + std::string(id) + "'");
}

IndexValue eval_bound(const BoundSpec& bound, const Cell& cell, const BoundParam& param) {
  if (auto why = bound.violation(cell, param)) {
    throw ParameterError("bound " + bound.id + " does not apply: " + *why);
  }
  return bound.formula(cell, param);
}

ParameterGrid ParameterGrid::defaults() { return ParameterGrid{}; }

std::vector<FunctionSpec> ParameterGrid::functions() const {
  std::vector<FunctionSpec> out;
  for (double a : alphas) out.push_back(FunctionSpec::power(a));
  for (double a : bases) out.push_back(FunctionSpec::exdeg(a));
  out.push_back(FunctionSpec::identity());
  out.push_back(FunctionSpec::self_power());
  return out;
}

std::vector<BoundParam> ParameterGrid::params_for(const BoundSpec& bound) const {
  std::vector<BoundParam> candidates;
  switch (bound.param_kind()) {
    case ParamKind::none: candidates.emplace_back(std::monostate{}); break;
    case ParamKind::alpha:
      for (double a : alphas) candidates.emplace_back(Alpha{a});
      break;
    case ParamKind::base:
      for (double a : bases) candidates.emplace_back(ExpBase{a});
      break;
    case ParamKind::function:
      for (const auto& f : functions()) candidates.emplace_back(f);
      break;
  }
  std::vector<BoundParam> out;
  for (auto& p : candidates) {
    if (!bound.param_violation(p)) out.push_back(std::move(p));
  }
  return out;
}

namespace {

bool on_convexity_edge(const BoundSpec& bound, const BoundParam& param) {
  double a = 0.0;
  if (const auto* base = std::get_if<ExpBase>(&param)) {
    a = base->value;
  } else if (const auto* f = std::get_if<FunctionSpec>(&param);
             f && f->family() == FunctionSpec::Family::exdeg && bound.mode() == Mode::additive) {
    a = f->parameter();
  } else {
    return false;
  }
  const double edge = std::exp(-2.0 / bound.convexity_floor);
  return std::fabs(a - edge) <= 1e-12;
}

}  // namespace

std::size_t AuditReport::violations() const {
  std::size_t count = 0;
  for (const auto& r : rows) count += r.applicable && !r.satisfied;
  return count;
}

std::size_t AuditReport::sharpness_failures() const {
  std::size_t count = 0;
  for (const auto& r : rows) count += !r.sharpness_ok();
  return count;
}

AuditReport audit(const Graph& g, const AuditOptions& options) {
  if (!is_unicyclic(g)) throw DomainError("audit requires a unicyclic graph");
  AuditReport report;
  report.n = g.order();
  report.max_degree = max_degree(g);
  report.pendants = pendant_count(g);
  report.code = g.order() <= kMaxCanonicalOrder ? canonical_code(g) : CanonicalCode{};
  if (g.order() == 3) return report;

  const auto degrees = degree_sequence(g);
  const Cell cell{g.order(), report.max_degree, report.pendants};
  std::map<std::string, bool> membership;  // keyed by family description

  for (const auto& bound : catalog()) {
    for (const auto& param : options.grid.params_for(bound)) {
      AuditRow row;
      row.bound_id = bound.id;
      row.param = param;
      row.iff = bound.sharpness == Sharpness::iff;
      row.boundary = on_convexity_edge(bound, param);
      row.applicable = !bound.violation(cell, param).has_value();
      if (row.applicable) {
        row.value = eval_on_sequence(bound.objective(param), degrees);
        row.bound_value = bound.formula(cell, param);
        const auto order = compare(row.value, row.bound_value, options.tolerance);
        row.satisfied = bound.side == Side::lower ? order >= 0 : order <= 0;
        row.tight = order == 0;
        const auto fam = bound.sharp_family(cell);
        const auto key = to_string(fam);
        auto it = membership.find(key);
        if (it == membership.end()) it = membership.emplace(key, degrees == defining_sequence(fam)).first;
        row.member = it->second;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string render_text(const AuditReport& report, std::string_view graph_id) {
  std::ostringstream out;
  out << "graph " << graph_id << ": n=" << report.n << " Delta=" << report.max_degree << " p=" << report.pendants;
  if (!report.code.bytes.empty()) out << " code=" << report.code.hex();
  out << '\n';
  if (report.n == 3) {
    out << "  n = 3: the only unicyclic graph is C_3; no bounds apply\n";
    return out.str();
  }
  for (const auto& r : report.rows) {
    if (!r.applicable) continue;
    const char* status = !r.satisfied ? "VIOLATED" : (!r.sharpness_ok() ? "SHARPNESS-MISMATCH" : "ok");
    out << "  " << status << ' ' << r.bound_id << ' ' << to_string(r.param) << " value=" << r.value.to_decimal()
        << " bound=" << r.bound_value.to_decimal() << (r.tight ? " tight" : "") << (r.member ? " member" : "")
        << (r.boundary ? " boundary" : "") << '\n';
  }
  out << "  violations=" << report.violations() << " sharpness_failures=" << report.sharpness_failures() << '\n';
  return out.str();
}

std::string render_tabular(const AuditReport& report, std::string_view graph_id) {
  std::ostringstream out;
  for (const auto& r : report.rows) {
    if (!r.applicable) continue;
    out << graph_id << ',' << r.bound_id << ',' << to_string(r.param) << ',' << r.value.to_decimal() << ','
        << r.bound_value.to_decimal() << ',' << r.satisfied << ',' << r.tight << ',' << r.member << '\n';
  }
  return out.str();
}

}  // namespace unicyclic
