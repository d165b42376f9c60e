// Acceptance run: prints one PASS/FAIL line per criterion, exits nonzero if any fail.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bnclass/divisor_classes.hpp"
#include "bnclass/serialize.hpp"
#include "bnclass/table.hpp"
#include "bnclass/teichmuller.hpp"
#include "bnclass/test_families.hpp"

namespace {

using namespace bnclass;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first mismatch and keeps going.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && failure_.empty()) failure_ = what;
  }
  Outcome done(const std::string& summary) const {
    if (!failure_.empty()) return {false, failure_};
    return {true, summary + " (" + std::to_string(count_) + " checks)"};
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

DownClass parse_class(int g, int k, const std::vector<std::string>& coeffs) {
  std::vector<Rational> q;
  for (const auto& c : coeffs) q.push_back(parse_rational(c));
  return DownClass::from_coefficients(g, k, q);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome weierstrass_count() {
  const auto t0 = Clock::now();
  Check c;
  for (int g = 2; g <= 12; ++g) {
    std::vector<int> a;
    for (int i = 0; i <= g - 2; ++i) a.push_back(i);
    a.push_back(g);
    const Integer n = count_special(BNData{g, 2 * g - 2, VanishingSequence(a)});
    c.expect(n == Integer(g) * (g * g - 1), "g=" + std::to_string(g) + " gave " + n.get_str());
  }
  const double s = seconds_since(t0);
  c.expect(s < 1.0, "took " + std::to_string(s) + " s");
  return c.done("g in [2,12]");
}

Outcome h22() {
  Check c;
  const DownClass cls = stratum_h22();
  c.expect(classes_equal(cls, parse_class(2, 2, {"-2", "12", "-1", "0"})), "stratum class is " + to_text(cls));
  c.expect(!classes_equal(cls, parse_class(2, 2, {"-2", "12", "-1", "1"})), "relation check is vacuous");
  return c.done(to_text(cls) + " == -2*eta + 12*lambda - 1*delta0 mod relation");
}

Outcome dual_path() {
  const auto t0 = Clock::now();
  Check c;
  std::size_t cells = 0;
  for (int g = 3; g <= 6; ++g) {
    for (const BNData& data : enumerate_divisorial(g, 3, 2 * g - 2)) {
      for (int k = 1; k <= 3; ++k) {
        const VerificationReport r = verify_dual_path(g, k, data.d, data.a.entries());
        ++cells;
        std::ostringstream where;
        where << "g=" << g << " k=" << k << " d=" << data.d;
        c.expect(r.status == VerificationStatus::Pass, where.str() + ": " + r.message);
        c.expect(r.direct && r.pushforward && r.families && *r.direct == *r.pushforward && *r.direct == *r.families,
                 where.str() + ": routes differ");
      }
    }
  }
  const double s = seconds_since(t0);
  c.expect(s < 30.0, "took " + std::to_string(s) + " s");
  return c.done(std::to_string(cells) + " cells");
}

Outcome spot_values() {
  Check c;
  const struct {
    int g, k;
    std::vector<std::string> coeffs;
  } cases[] = {{2, 2, {"-6", "68", "-6", "-10"}},
               {3, 1, {"-24", "68", "-6", "-12"}},
               {4, 1, {"-60", "114", "-10", "-21", "-28"}}};
  for (const auto& x : cases) {
    const DownClass expected = parse_class(x.g, x.k, x.coeffs);
    const DownClass got = weierstrass_k_class(x.g, x.k);
    const std::string tag = "(g,k)=(" + std::to_string(x.g) + "," + std::to_string(x.k) + ") ";
    c.expect(got == expected, tag + "closed form " + to_text(got));
    c.expect(pushforward_product(incidence_class(x.g, x.k), weierstrass_pointed_class(x.g, x.k)) == expected,
             tag + "push-forward differs");
  }
  return c.done("three closed-form classes, also via push-forward");
}

Outcome worked_case() {
  Check c;
  const VerificationReport r = verify_dual_path(3, 1, 2, {0, 1});
  c.expect(r.status == VerificationStatus::Pass, "status " + std::string(status_name(r.status)));
  c.expect(r.mu_nu && r.mu_nu->mu == parse_rational("3/2") && r.mu_nu->nu == 0, "mu/nu wrong");
  c.expect(r.direct && *r.direct == parse_class(3, 1, {"0", "36", "-4", "-12"}), "class wrong");
  c.expect(r.residuals.size() == 4, "expected four family rows, got " + std::to_string(r.residuals.size()));
  for (const RowResidual& res : r.residuals) c.expect(res.value == 0, res.row + " residual " + to_string(res.value));
  return c.done("mu=3/2 nu=0, 36*lambda - 4*delta0 - 12*delta1, four zero residuals");
}

Outcome mu_nu_properties() {
  Check c;
  for (int g = 3; g <= 6; ++g) {
    for (const BNData& data : enumerate_divisorial(g, 3, 2 * g - 2)) {
      const MuNu m = mu_nu(data);
      c.expect(m.mu >= 0 && m.nu >= 0, "negative mu/nu at g=" + std::to_string(g) + " d=" + std::to_string(data.d));
    }
  }
  for (int g = 3; g <= 10; ++g) {
    const MuNu m = mu_nu(weierstrass_data(g));
    c.expect(m.mu == 0 && m.nu == 1, "Weierstrass g=" + std::to_string(g));
  }
  return c.done("grid g in [3,6] nonnegative; Weierstrass (0,1) for g in [3,10]");
}

Outcome xi_relation() {
  Check c;
  for (int g = 4; g <= 8; ++g) {
    for (const BNData& data : enumerate_divisorial(g, 3, 2 * g - 2)) {
      const DownClass cls = bn_k_class_direct(data, 1);
      for (int i = 2; i <= g / 2; ++i) {
        c.expect(cls.delta[i] == make_rational(Integer(i * (g - i)), Integer(g - 1)) * cls.delta[1],
                 "g=" + std::to_string(g) + " i=" + std::to_string(i));
      }
    }
  }
  return c.done("g in [4,8]");
}

Outcome teichmuller() {
  Check c;
  std::mt19937 rng(2024);
  auto rational = [&](int lo_num, int hi_num, int den) {
    return make_rational(Integer(std::uniform_int_distribution<int>(lo_num, hi_num)(rng)),
                         Integer(std::uniform_int_distribution<int>(1, den)(rng)));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int g = std::uniform_int_distribution<int>(2, 10)(rng);
    const Rational chi = rational(-400, -1, 12);
    const Rational lyapunov = make_rational(Integer(std::uniform_int_distribution<int>(0, 60 * g)(rng)), Integer(60));
    const Rational c_sv = rational(0, 100, 12);
    const Rational s = rational(1, 30, 7);

    const TeichCurve ab{1, g, chi, lyapunov, std::nullopt};
    const IntersectionTable t1 = intersections(ab);
    c.expect(t1.incidence == chi / 4 && t1.incidence == t1.psi - t1.eta, "k=1 incidence");
    c.expect(consistency_psi(ab), "consistency_psi");
    const IntersectionTable t1s = intersections(TeichCurve{1, g, s * chi, lyapunov, std::nullopt});
    c.expect(t1s.lambda == s * t1.lambda && t1s.boundary == s * t1.boundary && t1s.psi == s * t1.psi &&
                 t1s.eta == s * t1.eta && t1s.incidence == s * t1.incidence,
             "k=1 scaling");

    const TeichCurve quad{2, g, chi, std::nullopt, c_sv};
    const IntersectionTable t2 = intersections(quad);
    c.expect(t2.incidence == chi / 3 && t2.incidence == 2 * t2.psi - t2.eta, "k=2 incidence");
    const IntersectionTable t2s = intersections(TeichCurve{2, g, s * chi, std::nullopt, c_sv});
    c.expect(t2s.lambda == s * t2.lambda && t2s.boundary == s * t2.boundary && t2s.psi == s * t2.psi &&
                 t2s.eta == s * t2.eta && t2s.incidence == s * t2.incidence,
             "k=2 scaling");
  }
  return c.done("200 random curves per k");
}

Outcome integrality() {
  Check c;
  std::mt19937 rng(7);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int accepted = 0;
  long drawn = 0;
  while (accepted < 1000) {
    ++drawn;
    const int g = uniform(2, 8);
    const int r = uniform(0, 4);
    const int d = uniform(r, 12);
    std::vector<int> pool(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> a(pool.begin(), pool.begin() + r + 1);
    std::sort(a.begin(), a.end());
    const VanishingSequence seq(a);
    if (rho(g, r, d, seq) != -1) continue;
    ++accepted;
    const Rational n = special_count_sum(g, d, seq.entries());
    c.expect(is_integer(n) && n >= 0, "g=" + std::to_string(g) + " d=" + std::to_string(d) + " gave " + to_string(n));
    c.expect(Rational(count_special(BNData{g, d, seq})) == n, "count_special disagrees with formula");
  }
  return c.done("1000 random rho = -1 inputs from " + std::to_string(drawn) + " draws");
}

Outcome serialization() {
  Check c;
  std::mt19937 rng(99);
  auto q = [&] {
    return make_rational(Integer(std::uniform_int_distribution<int>(-99, 99)(rng)),
                         Integer(std::uniform_int_distribution<int>(1, 20)(rng)));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int g = std::uniform_int_distribution<int>(2, 12)(rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    DownClass d = DownClass::zero(g, k);
    d.eta = q();
    d.lambda = q();
    for (auto& x : d.delta) x = q();
    c.expect(down_class_from_json(Json::parse(to_json(d).dump())) == d, "down class round trip");
    UpClass u = UpClass::zero(g, k);
    u.eta = q();
    u.lambda = q();
    u.psi = q();
    for (auto& x : u.delta) x = q();
    c.expect(up_class_from_json(Json::parse(to_json(u).dump())) == u, "pointed class round trip");
  }
  for (int g = 2; g <= 5; ++g) {
    for (const BNData& data : enumerate_divisorial(g, 3, 2 * g - 2)) {
      const Json j = to_json(verify_dual_path(g, 2, data.d, data.a.entries()));
      c.expect(to_json(report_from_json(Json::parse(j.dump()))) == j, "report round trip");
    }
  }
  TableGrid grid;
  grid.g_min = 2;
  grid.g_max = 6;
  grid.k_min = 1;
  grid.k_max = 3;
  grid.d_max = 10;
  grid.r_max = 3;
  const std::string one = generate_table(grid, 1).dump(2);
  const std::string eight = generate_table(grid, 8).dump(2);
  c.expect(one == eight, "table differs between 1 and 8 jobs");
  return c.done("classes, reports, table of " + std::to_string(one.size()) + " bytes");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 Weierstrass count", weierstrass_count},
      {"2 genus 2 stratum class", h22},
      {"3 dual-path agreement", dual_path},
      {"4 Weierstrass spot values", spot_values},
      {"5 worked non-Weierstrass case", worked_case},
      {"6 mu/nu properties", mu_nu_properties},
      {"7 boundary ratio relation", xi_relation},
      {"8 Teichmuller identities", teichmuller},
      {"9 integrality", integrality},
      {"10 serialization", serialization},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
