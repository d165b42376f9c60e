#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "bnclass/brill_noether.hpp"
#include "bnclass/divisor_classes.hpp"
#include "bnclass/error.hpp"
#include "bnclass/serialize.hpp"
#include "bnclass/table.hpp"
#include "bnclass/teichmuller.hpp"
#include "bnclass/test_families.hpp"

namespace bnclass::cli {

namespace {

// Input/output failures that are not domain errors.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lookups that miss (e.g. a cell absent from a table): exit 2.
struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::RhoNotMinusOne:
    case ErrorCode::MissingParameter:
    case ErrorCode::ContextMismatch:
      return kExitBadInput;
    case ErrorCode::GenusTooSmall:
    case ErrorCode::Unsupported:
    case ErrorCode::SingularSystem:
    case ErrorCode::ZeroDenominator:
      return kExitUnsupported;
    case ErrorCode::SchemaMismatch:
      return kExitSchema;
    case ErrorCode::InvariantViolation:
      return kExitVerificationFailed;
  }
  return kExitBadInput;
}

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "range must look like A..B, got '" + text + "'");
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("cannot parse '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw IoError("cannot write '" + path + "'");
  }
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

// Shared --g/--d/--a/--format options.
struct DatumFlags {
  int g = 0;
  std::optional<int> r;
  int d = 0;
  int k = 1;
  std::vector<int> a;
  std::string format = "text";

  BNData datum() const {
    BNData data{g, d, VanishingSequence(a)};
    if (r && *r != data.r()) {
      throw Error(ErrorCode::InvalidInput, "--r disagrees with the length of --a");
    }
    data.validate();
    return data;
  }
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_datum(CLI::App* cmd, DatumFlags& f, bool with_r = true) {
  cmd->add_option("--g", f.g, "Genus")->required();
  if (with_r) cmd->add_option("--r", f.r, "Dimension r (defaults to len(a)-1)");
  cmd->add_option("--d", f.d, "Degree")->required();
  cmd->add_option("--a", f.a, "Vanishing sequence, comma separated")->required()->delimiter(',');
  add_format(cmd, f.format);
}

void print_down(std::ostream& out, const DownClass& c, const std::string& format) {
  if (format == "json") {
    out << to_json(c).dump() << '\n';
  } else if (format == "csv") {
    out << csv_header(c) << '\n' << csv_row(c) << '\n';
  } else {
    out << to_text(c) << '\n';
  }
}

void print_up(std::ostream& out, const UpClass& c, const std::string& format) {
  if (format == "json") {
    out << to_json(c).dump() << '\n';
  } else if (format == "csv") {
    out << csv_header(c) << '\n' << csv_row(c) << '\n';
  } else {
    out << to_text(c) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact divisor classes of Brill-Noether incidence loci in projectivized Hodge bundles"};
  app.name("bnclass");
  app.require_subcommand(1);

  int code = kExitOk;
  std::function<void()> action;

  // ---- bn -------------------------------------------------------------------
  auto* bn = app.add_subcommand("bn", "Brill-Noether numbers, counts and mu/nu");
  bn->require_subcommand(1);
  DatumFlags bn_flags;
  int r_max = 0;
  int d_max = 1;

  auto* bn_rho = bn->add_subcommand("rho", "Adjusted Brill-Noether number");
  add_datum(bn_rho, bn_flags);
  bn_rho->callback([&] {
    action = [&] {
      VanishingSequence a(bn_flags.a);
      const int r = bn_flags.r.value_or(a.r());
      const int value = rho(bn_flags.g, r, bn_flags.d, a);
      if (bn_flags.format == "json") {
        out << Json{{"rho", value}}.dump() << '\n';
      } else if (bn_flags.format == "csv") {
        out << "rho\n" << value << '\n';
      } else {
        out << value << '\n';
      }
    };
  });

  auto* bn_count = bn->add_subcommand("count", "Number of Brill-Noether special pointed linear series");
  add_datum(bn_count, bn_flags);
  bn_count->callback([&] {
    action = [&] {
      const std::string n = to_string(count_special(bn_flags.datum()));
      if (bn_flags.format == "json") {
        out << Json{{"n", n}}.dump() << '\n';
      } else if (bn_flags.format == "csv") {
        out << "n\n" << n << '\n';
      } else {
        out << n << '\n';
      }
    };
  });

  auto* bn_munu = bn->add_subcommand("munu", "Coefficients mu and nu");
  add_datum(bn_munu, bn_flags);
  bn_munu->callback([&] {
    action = [&] {
      const MuNu mn = mu_nu(bn_flags.datum());
      if (bn_flags.format == "json") {
        out << Json{{"mu", to_string(mn.mu)}, {"nu", to_string(mn.nu)}}.dump() << '\n';
      } else if (bn_flags.format == "csv") {
        out << "mu,nu\n" << to_string(mn.mu) << ',' << to_string(mn.nu) << '\n';
      } else {
        out << "mu=" << to_string(mn.mu) << " nu=" << to_string(mn.nu) << '\n';
      }
    };
  });

  auto* bn_enum = bn->add_subcommand("enumerate", "All divisorial (rho = -1) data in a box");
  bn_enum->add_option("--g", bn_flags.g, "Genus")->required();
  bn_enum->add_option("--r-max", r_max, "Largest r")->required();
  bn_enum->add_option("--d-max", d_max, "Largest degree")->required();
  add_format(bn_enum, bn_flags.format);
  bn_enum->callback([&] {
    action = [&] {
      const auto data = enumerate_divisorial(bn_flags.g, r_max, d_max);
      if (bn_flags.format == "json") {
        Json arr = Json::array();
        for (const auto& x : data) {
          arr.push_back(Json{{"g", x.g}, {"r", x.r()}, {"d", x.d}, {"a", x.a.entries()}});
        }
        out << arr.dump() << '\n';
      } else if (bn_flags.format == "csv") {
        out << "g,r,d,a\n";
        for (const auto& x : data) {
          out << x.g << ',' << x.r() << ',' << x.d << ',' << join_ints(x.a.entries(), ';') << '\n';
        }
      } else {
        for (const auto& x : data) {
          out << "r=" << x.r() << " d=" << x.d << " a=" << join_ints(x.a.entries(), ',') << '\n';
        }
      }
    };
  });

  // ---- class ----------------------------------------------------------------
  auto* cls = app.add_subcommand("class", "Divisor classes");
  cls->require_subcommand(1);
  DatumFlags cls_flags;
  bool raw = false;

  auto* cls_w = cls->add_subcommand("weierstrass", "Differentials vanishing at a Weierstrass point");
  cls_w->add_option("--g", cls_flags.g, "Genus")->required();
  cls_w->add_option("--k", cls_flags.k, "Order of the differentials")->required();
  add_format(cls_w, cls_flags.format);
  cls_w->callback([&] { action = [&] { print_down(out, weierstrass_k_class(cls_flags.g, cls_flags.k), cls_flags.format); }; });

  auto* cls_bn = cls->add_subcommand("bn-divisor", "Differentials vanishing at a Brill-Noether special point");
  add_datum(cls_bn, cls_flags, false);
  cls_bn->add_option("--k", cls_flags.k, "Order of the differentials")->required();
  cls_bn->callback([&] { action = [&] { print_down(out, bn_k_class_direct(cls_flags.datum(), cls_flags.k), cls_flags.format); }; });

  auto* cls_inc = cls->add_subcommand("incidence", "Incidence divisor on the pointed space");
  cls_inc->add_option("--g", cls_flags.g, "Genus")->required();
  cls_inc->add_option("--k", cls_flags.k, "Order of the differentials")->required();
  add_format(cls_inc, cls_flags.format);
  cls_inc->callback([&] { action = [&] { print_up(out, incidence_class(cls_flags.g, cls_flags.k), cls_flags.format); }; });

  auto* cls_pt = cls->add_subcommand("pointed", "Pointed Brill-Noether divisor mu*BN + nu*W");
  add_datum(cls_pt, cls_flags, false);
  cls_pt->add_option("--k", cls_flags.k, "Context k for the pointed space (default 1)");
  cls_pt->callback([&] {
    action = [&] {
      const BNData data = cls_flags.datum();
      const MuNu mn = resolve_mu_nu(data);
      const UpClass c =
          mn.mu * brill_noether_pointed_class(data.g, cls_flags.k) + mn.nu * weierstrass_pointed_class(data.g, cls_flags.k);
      print_up(out, c, cls_flags.format);
    };
  });

  auto* cls_h22 = cls->add_subcommand("h22", "Genus 2 stratum of squares of abelian differentials");
  cls_h22->add_flag("--raw", raw, "Print (combined - W)/2 without eliminating delta1");
  add_format(cls_h22, cls_flags.format);
  cls_h22->callback([&] {
    action = [&] {
      const DownClass c = stratum_h22();
      print_down(out, raw ? c : eliminate_delta1(c), cls_flags.format);
    };
  });

  // ---- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Compare the closed form, push-forward and test-family routes");
  std::string g_range;
  std::string k_range;
  std::string out_path;
  int v_d_max = 1;
  int v_r_max = 0;
  verify->add_option("--g-range", g_range, "Genus range A..B")->required();
  verify->add_option("--k-range", k_range, "k range A..B")->required();
  verify->add_option("--d-max", v_d_max, "Largest degree")->required();
  verify->add_option("--r-max", v_r_max, "Largest r")->required();
  verify->add_option("--out", out_path, "Report file (default stdout)");
  verify->callback([&] {
    action = [&] {
      const Range gr = parse_range(g_range);
      const Range kr = parse_range(k_range);
      if (gr.lo < 2 || gr.hi < gr.lo || kr.lo < 1 || kr.hi < kr.lo) {
        throw Error(ErrorCode::InvalidInput, "ranges need 2 <= g and 1 <= k with A <= B");
      }
      Json reports = Json::array();
      bool failed = false;
      for (int g = gr.lo; g <= gr.hi; ++g) {
        const auto data = enumerate_divisorial(g, v_r_max, v_d_max);
        for (int k = kr.lo; k <= kr.hi; ++k) {
          for (const auto& x : data) {
            const VerificationReport rep = verify_dual_path(g, k, x.d, x.a.entries());
            failed = failed || rep.status == VerificationStatus::Fail;
            reports.push_back(to_json(rep));
          }
        }
      }
      const std::string text = reports.dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        write_text_file(out_path, text);
      }
      code = failed ? kExitVerificationFailed : kExitOk;
    };
  });

  // ---- teich ----------------------------------------------------------------
  auto* teich = app.add_subcommand("teich", "Teichmuller curve intersection numbers");
  teich->require_subcommand(1);
  int t_k = 1;
  int t_g = 2;
  std::string t_chi = "-1";
  std::optional<std::string> t_L;
  std::optional<std::string> t_csv;
  std::string t_ample;
  std::string t_curves;
  std::string t_format = "json";

  const auto curve_from_flags = [&] {
    TeichCurve tc;
    tc.k = t_k;
    tc.g = t_g;
    tc.chi = parse_rational(t_chi);
    if (t_L) tc.lyapunov_sum = parse_rational(*t_L);
    if (t_csv) tc.c_sv = parse_rational(*t_csv);
    tc.validate();
    return tc;
  };

  auto* t_table = teich->add_subcommand("table", "Intersections with eta, lambda, psi, boundary and the incidence divisor");
  t_table->add_option("--k", t_k, "1 (abelian) or 2 (quadratic)")->required();
  t_table->add_option("--g", t_g, "Genus")->required();
  t_table->add_option("--chi", t_chi, "Euler characteristic (rational)")->required();
  t_table->add_option("--L", t_L, "Sum of the top g Lyapunov exponents (k = 1)");
  t_table->add_option("--c-sv", t_csv, "Area Siegel-Veech constant (k = 2)");
  t_table->callback([&] { action = [&] { out << to_json(intersections(curve_from_flags())).dump() << '\n'; }; });

  auto* t_thr = teich->add_subcommand("threshold", "Big-divisor threshold d for an ample class");
  t_thr->add_option("--k", t_k, "1 or 2")->required();
  t_thr->add_option("--g", t_g, "Genus")->required();
  t_thr->add_option("--ample", t_ample, "c_eta,c_lambda,c_psi,c_0,...,c_{g-1}")->required();
  t_thr->add_option("--curves", t_curves, "JSON array of curves");
  t_thr->add_option("--chi", t_chi, "Euler characteristic for a single curve");
  t_thr->add_option("--L", t_L, "Lyapunov sum for a single curve (k = 1)");
  t_thr->add_option("--c-sv", t_csv, "Siegel-Veech constant for a single curve (k = 2)");
  t_thr->add_option("--format", t_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  t_thr->callback([&] {
    action = [&] {
      const auto values = parse_rational_list(t_ample);
      const AmpleVector ample = AmpleVector::from_list(t_g, values);
      std::vector<TeichCurve> curves;
      if (!t_curves.empty()) {
        curves = teich_curves_from_json(read_json_file(t_curves));
      } else if (t_L || t_csv) {
        curves.push_back(curve_from_flags());
      } else {
        throw Error(ErrorCode::MissingParameter, "threshold needs --curves FILE, --L or --c-sv");
      }
      for (const auto& c : curves) {
        if (c.k != t_k || c.g != t_g) {
          throw Error(ErrorCode::InvalidInput, "curve (k, g) does not match --k/--g");
        }
      }
      const ThresholdSummary s = infimum_threshold(curves, ample);
      if (t_format == "text") {
        out << to_string(s.infimum) << '\n';
        return;
      }
      Json per_curve = Json::array();
      for (const auto& c : curves) per_curve.push_back(to_string(threshold_d(c, ample)));
      Json doc;
      doc["threshold"] = to_string(s.infimum);
      doc["positive"] = s.positive;
      doc["per_curve"] = std::move(per_curve);
      if (t_k == 1) {
        const auto opt = [](const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); };
        doc["at_L_0"] = opt(s.at_l_zero);
        doc["at_L_g"] = opt(s.at_l_genus);
        doc["extremes_positive"] = s.extremes_positive;
      }
      out << doc.dump() << '\n';
    };
  });

  // ---- table ----------------------------------------------------------------
  auto* table = app.add_subcommand("table", "Cached tables of classes");
  table->require_subcommand(1);
  std::string tg_range;
  std::string tk_range;
  int tb_d_max = 1;
  int tb_r_max = 0;
  unsigned jobs = 1;
  std::string tb_out;
  std::string tb_in;
  DatumFlags tq;

  auto* t_gen = table->add_subcommand("generate", "Write a deterministic table of n, mu, nu and classes");
  t_gen->add_option("--g-range", tg_range, "Genus range A..B")->required();
  t_gen->add_option("--k-range", tk_range, "k range A..B")->required();
  t_gen->add_option("--d-max", tb_d_max, "Largest degree")->required();
  t_gen->add_option("--r-max", tb_r_max, "Largest r")->required();
  t_gen->add_option("--out", tb_out, "Output JSON file")->required();
  t_gen->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  t_gen->callback([&] {
    action = [&] {
      const Range gr = parse_range(tg_range);
      const Range kr = parse_range(tk_range);
      const TableGrid grid{gr.lo, gr.hi, kr.lo, kr.hi, tb_d_max, tb_r_max};
      write_text_file(tb_out, generate_table(grid, jobs).dump(2) + "\n");
    };
  });

  auto* t_query = table->add_subcommand("query", "Read one cell back from a table");
  t_query->add_option("--in", tb_in, "Table JSON file")->required();
  t_query->add_option("--g", tq.g, "Genus")->required();
  t_query->add_option("--k", tq.k, "k")->required();
  t_query->add_option("--d", tq.d, "Degree")->required();
  t_query->add_option("--a", tq.a, "Vanishing sequence")->required()->delimiter(',');
  t_query->callback([&] {
    action = [&] {
      const Json doc = read_json_file(tb_in);
      const auto cell = query_table(doc, tq.g, tq.k, tq.d, tq.a);
      if (!cell) {
        throw NotFound("not in table");
      }
      out << cell->dump() << '\n';
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const IoError& e) {
    err << "error: I/O: " << e.what() << '\n';
    return kExitIo;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kExitBadInput;
  }
  return code;
}

}  // namespace bnclass::cli
