#include "cli.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "report.hpp"
#include "skewpath/characters.hpp"
#include "skewpath/errors.hpp"
#include "skewpath/json.hpp"
#include "skewpath/schur.hpp"
#include "skewpath/spectra.hpp"
#include "skewpath/twisted.hpp"

namespace skewpath::cli {

using nlohmann::json;

namespace {

struct Options {
  int n = 0;
  int k = 0;
  int N = 0;
  int order = 6;
  std::string shape;
  std::string h;
  std::string lambda;
  std::string method;
  std::string variant;
  bool relation = false;
  bool csv = false;
  bool pretty = false;
  bool quick = false;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_positive(int n, const char* flag) {
  if (n < 1) throw UsageError(std::string(flag) + " must be positive, got '" + std::to_string(n) + "'");
}

void require_nonnegative(int v, const char* flag) {
  if (v < 0) throw UsageError(std::string(flag) + " must be nonnegative, got '" + std::to_string(v) + "'");
}

json strip_list(const std::vector<StripTerm>& strips) {
  json out = json::array();
  for (const auto& s : strips) out.push_back({{"strip", to_string(s.strip)}, {"exponent", s.exponent}});
  return out;
}

DecompositionVariant parse_variant(const std::string& v) {
  return v == "b" ? DecompositionVariant::B : DecompositionVariant::A;
}

SchurMethod parse_method(const std::string& m) {
  if (m == "enum") return SchurMethod::Enumerative;
  if (m == "strip") return SchurMethod::BorderStrip;
  return SchurMethod::JacobiTrudi;
}

// One identity checked over many cases, reported as a single record: the
// first failing case, or the number of cases when all agree.
class Batch {
 public:
  Batch(std::string identity, json range) : identity_(std::move(identity)), range_(std::move(range)) {}

  void check(const std::function<Report()>& one) {
    if (failure_) return;
    Report r = one();
    ++cases_;
    if (!r.equal) failure_ = std::move(r);
  }

  Report result() const {
    if (failure_) {
      Report r = *failure_;
      r.identity = identity_;
      r.parameters = {{"range", range_}, {"cases_checked", cases_}, {"failing_case", failure_->parameters}};
      return r;
    }
    Report r;
    r.identity = identity_;
    r.parameters = {{"range", range_}, {"cases", cases_}};
    return r;
  }

 private:
  std::string identity_;
  json range_;
  int cases_ = 0;
  std::optional<Report> failure_;
};

Report verify_djkmo(int n, int k, int order, const std::string& variant) {
  return compare("djkmo", {{"n", n}, {"k", k}, {"order", order}, {"variant", variant}}, level1_theta(n, k, order),
                 level1_decomposition(n, k, order, parse_variant(variant)));
}

Report verify_rogers(int n, int N) {
  RingContext ctx{n, false};
  return compare("rogers-szego", {{"n", n}, {"N", N}}, F_N(N, ctx), rogers_szego(N, ctx));
}

Report verify_polychronakos(int n, int N) {
  RingContext ctx{n, false};
  return compare("polychronakos", {{"n", n}, {"N", N}}, polychronakos_partition(N, ctx), sp_N_sum(N, ctx));
}

Report verify_vertex_sum(int n, int N) {
  RingContext ctx{n, false};
  return compare("vertex-sum", {{"n", n}, {"N", N}}, sp_N_sum(N, ctx), z_vertex(N, n));
}

Report verify_kostka(const Partition& lambda) {
  return compare("kostka-foulkes", {{"lambda", to_string(lambda)}}, kostka_foulkes(lambda).polynomial,
                 kostka_oracle(lambda));
}

Report verify_schur(const SkewDiagram& shape, int n, bool relation) {
  RingContext ctx{n, relation};
  return compare("schur-enum-jt", {{"shape", to_string(shape)}, {"n", n}, {"relation", relation}},
                 schur_enumerative(shape, ctx), schur_jacobi_trudi(shape, ctx));
}

Report verify_spectral(const SpectrumPoint& h) {
  RingContext ctx{h.n(), true};
  return compare("spectral", {{"n", h.n()}, {"h", h.blocks()}}, chi_fiber(h),
                 schur_jacobi_trudi(realize_border_strip(kappa(h)), ctx));
}

Report verify_twisted(int n, int order) {
  return compare("twisted", {{"n", n}, {"order", order}}, twisted_level1_theta(n, order),
                 twisted_decomposition(n, order));
}

Report verify_twisted_fibers(int n, int order) {
  return compare("twisted-fibers", {{"n", n}, {"order", order}}, twisted_level1_theta(n, order),
                 twisted_fiber_series(n, order));
}

// Block lists with parts in 1..n and sum at most max_size.
std::vector<SpectrumPoint> spectrum_points(int n, int max_size) {
  std::vector<SpectrumPoint> out;
  for (int N = 0; N <= max_size; ++N) {
    for (auto& h : enumerate_Sp_N(N, n)) out.push_back(std::move(h));
  }
  return out;
}

std::vector<Report> verify_all(bool quick) {
  std::vector<Report> out;
  auto timed = [&out](Batch b, const std::function<void(Batch&)>& body) {
    Stopwatch clock;
    body(b);
    Report r = b.result();
    r.wall_time_ms = clock.elapsed_ms();
    out.push_back(std::move(r));
  };

  const int max_n = quick ? 3 : 4;
  const int theta_order = quick ? 4 : 6;
  timed(Batch("djkmo", {{"n", {2, max_n}}, {"order", theta_order}, {"variants", {"a", "b"}}}), [&](Batch& b) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 0; k < n; ++k) {
        for (const char* v : {"a", "b"}) b.check([&] { return verify_djkmo(n, k, theta_order, v); });
      }
    }
  });

  const int rogers_N = quick ? 5 : 7;
  timed(Batch("rogers-szego", {{"n", {2, 3}}, {"N", {0, rogers_N}}}), [&](Batch& b) {
    for (int n = 2; n <= 3; ++n) {
      for (int N = 0; N <= rogers_N; ++N) b.check([&] { return verify_rogers(n, N); });
    }
  });

  const int poly_N = quick ? 5 : 6;
  timed(Batch("polychronakos", {{"n", {2, 3}}, {"N", {0, poly_N}}}), [&](Batch& b) {
    for (int n = 2; n <= 3; ++n) {
      for (int N = 0; N <= poly_N; ++N) {
        b.check([&] { return verify_polychronakos(n, N); });
        b.check([&] { return verify_vertex_sum(n, N); });
      }
    }
  });

  const int kostka_size = quick ? 5 : 6;
  timed(Batch("kostka-foulkes", {{"size", {0, kostka_size}}}), [&](Batch& b) {
    for (int s = 0; s <= kostka_size; ++s) {
      for (const auto& lambda : partitions_of(s, s)) b.check([&] { return verify_kostka(lambda); });
    }
  });

  const int schur_size = quick ? 6 : 8;
  timed(Batch("schur-enum-jt", {{"size", {0, schur_size}}, {"max_part", 4}, {"n", {1, 4}}}), [&](Batch& b) {
    for (int s = 0; s <= schur_size; ++s) {
      for (const auto& outer : partitions_of(s, s, 4)) {
        for (int t = 0; t <= s; ++t) {
          for (const auto& inner : partitions_of(t, outer.length(), 4)) {
            if (!outer.contains(inner)) continue;
            SkewDiagram shape(outer, inner);
            for (int n = 1; n <= 4; ++n) b.check([&] { return verify_schur(shape, n, false); });
          }
        }
      }
    }
  });

  const int spectral_size = quick ? 5 : 6;
  timed(Batch("spectral", {{"n", {2, 3}}, {"size", {0, spectral_size}}}), [&](Batch& b) {
    for (int n = 2; n <= 3; ++n) {
      for (const auto& h : spectrum_points(n, spectral_size)) b.check([&] { return verify_spectral(h); });
    }
  });

  const int twisted_order = quick ? 4 : 5;
  timed(Batch("twisted", {{"n", {1, 2}}, {"order", twisted_order}}), [&](Batch& b) {
    for (int n = 1; n <= 2; ++n) {
      b.check([&] { return verify_twisted(n, twisted_order); });
      b.check([&] { return verify_twisted_fibers(n, twisted_order); });
    }
  });
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  int schur(const Options& o) {
    require_positive(o.n, "--n");
    SkewDiagram shape = parse_skew_diagram(o.shape);
    RingContext ctx{o.n, o.relation};
    LaurentPolynomial p = skewpath::schur(shape, ctx, parse_method(o.method));
    if (o.pretty) {
      out_ << to_string(p) << "\n";
      return kOk;
    }
    emit({{"shape", to_string(shape)}, {"n", o.n}, {"method", o.method}, {"polynomial", to_json(p)}});
    return kOk;
  }

  int spectrum(const Options& o, bool has_sector) {
    require_positive(o.n, "--n");
    require_nonnegative(o.N, "--N");
    if (has_sector && (o.k < 0 || o.k >= o.n)) {
      throw UsageError("--k must lie in 0..n-1, got '" + std::to_string(o.k) + "'");
    }
    json rows = json::array();
    for (const auto& h : enumerate_Sp_N(o.N, o.n)) {
      if (has_sector && h.sector() != o.k) continue;
      rows.push_back({{"blocks", h.blocks()},
                      {"sector", h.sector()},
                      {"energy", energy(h)},
                      {"t", t_statistic(kappa(h))},
                      {"kappa", to_string(kappa(h))},
                      {"fiber_size", enumerate_fiber(h).size()}});
    }
    if (o.csv) {
      out_ << "blocks,sector,energy,t,kappa,fiber_size\n";
      for (const auto& r : rows) {
        out_ << csv_quote(join(r["blocks"].get<std::vector<int>>())) << "," << r["sector"] << "," << r["energy"]
             << "," << r["t"] << "," << csv_quote(r["kappa"].get<std::string>()) << "," << r["fiber_size"] << "\n";
      }
      return kOk;
    }
    emit({{"n", o.n}, {"N", o.N}, {"points", rows}});
    return kOk;
  }

  int fiber(const Options& o) {
    require_positive(o.n, "--n");
    SpectrumPoint h(o.n, parse_int_list(o.h));
    json configs = json::array();
    for (const auto& s : enumerate_fiber(h)) {
      configs.push_back({{"prefix", s.prefix()}, {"weight_x2", weight(s).doubled()}, {"energy", energy(s)}});
    }
    emit({{"n", o.n}, {"h", h.blocks()}, {"count", configs.size()}, {"configurations", configs}});
    return kOk;
  }

  int decompose(const Options& o) {
    check_theta(o);
    auto variant = parse_variant(o.variant);
    int sector = variant == DecompositionVariant::A ? o.k : (o.n - o.k) % o.n;
    QSeries series = level1_decomposition(o.n, o.k, o.order, variant);
    emit({{"n", o.n},
          {"k", o.k},
          {"order", o.order},
          {"variant", o.variant},
          {"strips", strip_list(level1_strips(o.n, sector, o.order))},
          {"series", to_json(series)}});
    return kOk;
  }

  int kostka(const Options& o, bool has_n) {
    Partition lambda = parse_partition(o.lambda);
    if (has_n) require_positive(o.n, "--n");
    KostkaResult r = kostka_foulkes(lambda, has_n ? o.n : 0);
    json strips = json::array();
    for (const auto& s : r.strips) strips.push_back({{"strip", to_string(s.strip)}, {"t", s.t}, {"lr", to_json(s.lr)}});
    emit({{"lambda", to_string(lambda)},
          {"polynomial", to_json(r.polynomial)},
          {"pretty", to_string(r.polynomial)},
          {"strip_count", r.strips.size()},
          {"strips", strips}});
    return kOk;
  }

  int verify(const std::string& which, const Options& o) {
    Stopwatch clock;
    if (which == "all") {
      auto reports = verify_all(o.quick);
      bool equal = true;
      json list = json::array();
      for (auto& r : reports) {
        equal = equal && r.equal;
        if (!o.timing) r.wall_time_ms = -1;
        list.push_back(r.to_json());
      }
      json doc = {{"identity", "all"}, {"quick", o.quick}, {"equal", equal}, {"reports", list}};
      if (o.timing) doc["wall_time_ms"] = clock.elapsed_ms();
      emit(doc);
      return equal ? kOk : kMismatch;
    }
    Report r = single(which, o);
    if (o.timing) r.wall_time_ms = clock.elapsed_ms();
    emit(r.to_json());
    return r.equal ? kOk : kMismatch;
  }

  int twisted_verify(const Options& o) {
    require_positive(o.n, "--n");
    require_nonnegative(o.order, "--order");
    Stopwatch clock;
    Report r = verify_twisted(o.n, o.order);
    if (o.timing) r.wall_time_ms = clock.elapsed_ms();
    emit(r.to_json());
    return r.equal ? kOk : kMismatch;
  }

  int twisted_schur(const Options& o) {
    require_positive(o.n, "--n");
    TwistedSpectrumPoint h(parse_int_list(o.h));
    LaurentPolynomial p = o.method == "det" ? sL_determinant(h, o.n) : chi_twisted_enumerative(h, o.n);
    if (o.pretty) {
      out_ << to_string(p) << "\n";
      return kOk;
    }
    emit({{"h", h.blocks()},
          {"n", o.n},
          {"method", o.method},
          {"strip", to_string(kappa_twisted(h, o.n))},
          {"polynomial", to_json(p)}});
    return kOk;
  }

 private:
  static void check_theta(const Options& o) {
    require_positive(o.n, "--n");
    require_nonnegative(o.order, "--order");
    if (o.k < 0 || o.k >= o.n) throw UsageError("--k must lie in 0..n-1, got '" + std::to_string(o.k) + "'");
  }

  static Report single(const std::string& which, const Options& o) {
    if (which == "djkmo") {
      check_theta(o);
      return verify_djkmo(o.n, o.k, o.order, o.variant);
    }
    if (which == "rogers" || which == "polychronakos") {
      require_positive(o.n, "--n");
      require_nonnegative(o.N, "--N");
      return which == "rogers" ? verify_rogers(o.n, o.N) : verify_polychronakos(o.n, o.N);
    }
    if (which == "kostka") return verify_kostka(parse_partition(o.lambda));
    if (which == "schur") {
      require_positive(o.n, "--n");
      return verify_schur(parse_skew_diagram(o.shape), o.n, o.relation);
    }
    require_positive(o.n, "--n");
    return verify_spectral(SpectrumPoint(o.n, parse_int_list(o.h)));
  }

  void emit(const json& doc) { out_ << doc.dump(2) << "\n"; }

  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks of level-1 vertex-model character identities", "skewpath"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  auto add_n = [&o](CLI::App* c) { return c->add_option("--n", o.n, "rank n of sl_n")->required(); };
  auto add_timing = [&o](CLI::App* c) { c->add_flag("--timing", o.timing, "include wall_time_ms in reports"); };
  auto add_theta = [&](CLI::App* c) {
    add_n(c);
    c->add_option("--k", o.k, "sector 0..n-1")->required();
    c->add_option("--order", o.order, "truncation order past the offset")->capture_default_str();
  };

  auto* schur_cmd = app.add_subcommand("schur", "skew Schur function of a shape");
  schur_cmd->add_option("--shape", o.shape, "lambda/mu, e.g. 5,4,4,1/4,3,2")->required();
  add_n(schur_cmd);
  schur_cmd->add_flag("--relation", o.relation, "impose x_1...x_n = 1");
  o.method = "jt";
  schur_cmd->add_option("--method", o.method)->check(CLI::IsMember({"enum", "jt", "strip"}))->capture_default_str();
  schur_cmd->add_flag("--pretty", o.pretty, "print the polynomial as text");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "block lists of size N with t-statistics and fiber sizes");
  add_n(spectrum_cmd);
  spectrum_cmd->add_option("--N", o.N, "total size")->required();
  auto* sector_opt = spectrum_cmd->add_option("--k,--sector", o.k, "keep one sector only");
  spectrum_cmd->add_flag("--csv", o.csv, "CSV instead of JSON");

  auto* fiber_cmd = app.add_subcommand("fiber", "spin configurations over one spectrum point");
  add_n(fiber_cmd);
  fiber_cmd->add_option("--h", o.h, "block list m_1,...,m_r")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "level-1 character as a sum over strips");
  add_theta(decompose_cmd);
  o.variant = "a";
  decompose_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"a", "b"}))->capture_default_str();

  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,(1^N)}");
  kostka_cmd->add_option("--lambda", o.lambda, "partition, e.g. 3,2,1")->required();
  auto* kostka_n = kostka_cmd->add_option("--n", o.n, "rank (default: length of lambda)");

  auto* verify_cmd = app.add_subcommand("verify", "check an identity exactly");
  verify_cmd->require_subcommand(1);
  auto* v_djkmo = verify_cmd->add_subcommand("djkmo", "theta function = strip decomposition");
  add_theta(v_djkmo);
  v_djkmo->add_option("--variant", o.variant)->check(CLI::IsMember({"a", "b"}))->capture_default_str();
  auto* v_rogers = verify_cmd->add_subcommand("rogers", "F_N = H_N");
  auto* v_poly = verify_cmd->add_subcommand("polychronakos", "q^{E_N} H_N(1/q) = sum over Sp_N");
  for (auto* c : {v_rogers, v_poly}) {
    add_n(c);
    c->add_option("--N", o.N)->required();
  }
  auto* v_kostka = verify_cmd->add_subcommand("kostka", "strip sum = triangular oracle");
  v_kostka->add_option("--lambda", o.lambda)->required();
  auto* v_schur = verify_cmd->add_subcommand("schur", "tableau sum = Jacobi-Trudi");
  v_schur->add_option("--shape", o.shape)->required();
  add_n(v_schur);
  v_schur->add_flag("--relation", o.relation);
  auto* v_spectral = verify_cmd->add_subcommand("spectral", "fiber character = s_kappa");
  add_n(v_spectral);
  v_spectral->add_option("--h", o.h)->required();
  auto* v_all = verify_cmd->add_subcommand("all", "every identity over a fixed range");
  v_all->add_flag("--quick", o.quick, "reduced bounds");
  for (auto* c : {v_djkmo, v_rogers, v_poly, v_kostka, v_schur, v_spectral, v_all}) add_timing(c);

  auto* twisted_cmd = app.add_subcommand("twisted", "the twisted vertex model");
  twisted_cmd->require_subcommand(1);
  auto* t_verify = twisted_cmd->add_subcommand("verify", "theta function = strip decomposition");
  add_n(t_verify);
  t_verify->add_option("--order", o.order)->capture_default_str();
  add_timing(t_verify);
  auto* t_schur = twisted_cmd->add_subcommand("schur", "character of one strip <m_1..m_r,2n>");
  t_schur->add_option("--h", o.h, "block list m_1,...,m_r")->required();
  add_n(t_schur);
  t_schur->add_option("--method", o.method)->check(CLI::IsMember({"enum", "det"}));
  t_schur->add_flag("--pretty", o.pretty);

  // Name the offending word when a command or subcommand is not known.
  const CLI::App* level = &app;
  for (const auto& word : args) {
    if (word.empty() || word.front() == '-' || level->get_subcommands({}).empty()) break;
    const CLI::App* next = nullptr;
    for (const auto* sub : level->get_subcommands({})) {
      if (sub->get_name() == word) next = sub;
    }
    if (next == nullptr) {
      err << "skewpath: unknown command '" << word << "'\n";
      return kUsage;
    }
    level = next;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "skewpath: " << e.what() << "\n";
    return kUsage;
  }

  if (*t_schur && t_schur->count("--method") == 0) o.method = "enum";

  Runner runner(out);
  try {
    if (*schur_cmd) return runner.schur(o);
    if (*spectrum_cmd) return runner.spectrum(o, sector_opt->count() > 0);
    if (*fiber_cmd) return runner.fiber(o);
    if (*decompose_cmd) return runner.decompose(o);
    if (*kostka_cmd) return runner.kostka(o, kostka_n->count() > 0);
    if (*verify_cmd) {
      for (auto* c : verify_cmd->get_subcommands()) return runner.verify(c->get_name(), o);
    }
    if (*t_verify) return runner.twisted_verify(o);
    if (*t_schur) return runner.twisted_schur(o);
  } catch (const ParseError& e) {
    err << "skewpath: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "skewpath: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "skewpath: " << e.what() << "\n";
    return kUsage;
  }
  err << "skewpath: no command given\n";
  return kUsage;
}

}  // namespace skewpath::cli
