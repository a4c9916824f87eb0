// Command-line front end: verify, classify, surface, act, hochschild. JSON out.
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/app/trials.hpp"
#include "hecke/cubic/singular.hpp"
#include "hecke/hochschild/homology.hpp"
#include "hecke/io/json.hpp"
#include "hecke/weyl/weyl.hpp"

using namespace hecke;
using io::Json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string t, s, delta, p, q = "2", word, poly, out;
  int random = 0;
  std::uint64_t seed = 1;
  int N = 10;
  bool generic = false;
  bool verbose = false;
};

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw InputError("malformed rational '" + item + "' in " + flag);
    }
  }
  if (out.size() != expected)
    throw InputError(flag + " expects " + std::to_string(expected) + " comma-separated rationals");
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

enum class SourceKind { t, s, p, random };

struct Source {
  SourceKind kind;
  daha::ParamTuple t;
  weyl::TorusPointS s;
  cubic::CubicSurface p;
};

Source resolve(const Options& o, std::initializer_list<SourceKind> allowed) {
  int given = !o.t.empty() + !o.s.empty() + !o.p.empty() + (o.random > 0);
  if (given != 1) throw InputError("give exactly one parameter source (--t, --s/--delta, --p or --random)");
  if (!o.delta.empty() && o.s.empty()) throw InputError("--delta requires --s");
  Source src{};
  if (!o.t.empty()) {
    src.kind = SourceKind::t;
    auto v = parse_list(o.t, 4, "--t");
    src.t = daha::ParamTuple(v[0], v[1], v[2], v[3]);
    try {
      src.t.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else if (!o.s.empty()) {
    src.kind = SourceKind::s;
    if (o.delta.empty()) throw InputError("--s requires --delta");
    auto v = parse_list(o.s, 4, "--s");
    auto d = parse_list(o.delta, 1, "--delta");
    try {
      src.s = weyl::TorusPointS::make({v[0], v[1], v[2], v[3]}, d[0]);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else if (!o.p.empty()) {
    src.kind = SourceKind::p;
    auto v = parse_list(o.p, 4, "--p");
    src.p = {v[0], v[1], v[2], v[3]};
  } else {
    src.kind = SourceKind::random;
  }
  for (auto k : allowed)
    if (k == src.kind) return src;
  throw InputError("this subcommand does not accept that parameter source");
}

cubic::CubicSurface surface_of(const Source& src) {
  switch (src.kind) {
    case SourceKind::t: return cubic::coeffs_from_params(src.t);
    case SourceKind::s: return weyl::pi(src.s);
    case SourceKind::p: return src.p;
    case SourceKind::random: break;
  }
  throw InputError("no surface");
}

Json tuple_notes(const daha::ParamTuple& t) {
  Json notes = Json::array();
  if (sgn(t.kb1()) == 0 && sgn(t.ub1()) == 0) notes.push_back(t.k1 == 1 ? "T1 = s" : "T1 = -s");
  if (sgn(t.kb0()) == 0 && sgn(t.ub0()) == 0) notes.push_back(t.k0 == 1 ? "T0 = P^-1 s" : "T0 = -P^-1 s");
  return notes;
}

int cmd_verify(const Options& o, Json& out) {
  const Source src = resolve(o, {SourceKind::t, SourceKind::random});
  std::vector<daha::ParamTuple> ts =
      src.kind == SourceKind::t ? std::vector<daha::ParamTuple>{src.t} : app::random_tuples(o.random, o.seed);
  out["seed"] = o.seed;
  const std::vector<Report> reports = app::verify_batch(ts, o.seed);
  Json trials = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Json failures = Json::array();
    for (const auto& c : reports[i].checks)
      if (!c.pass) failures.push_back(c.name);
    all = all && reports[i].passed();
    if (o.verbose)
      std::cerr << "trial " << i << ": " << reports[i].checks.size() << " checks, "
                << (reports[i].passed() ? "pass" : "FAIL") << "\n";
    Json trial{{"index", i}, {"t", io::to_json(ts[i])}, {"passed", reports[i].passed()},
               {"check_count", reports[i].checks.size()}, {"failures", failures}, {"notes", tuple_notes(ts[i])}};
    trial["checks"] = io::to_json(reports[i])["checks"];
    trials.push_back(std::move(trial));
  }
  out["trials"] = trials;
  out["passed"] = all;
  return all ? 0 : 1;
}

int cmd_classify(const Options& o, Json& out) {
  const Source src = resolve(o, {SourceKind::t, SourceKind::s, SourceKind::p, SourceKind::random});
  auto consistent = [](const cubic::SingularityReport& r) {
    if (!r.prediction) return true;
    return r.prediction->total_milnor == r.total_milnor() && r.completeness == "proved";
  };
  auto one = [&](const cubic::SingularityReport& r) {
    Json j = io::to_json(r);
    j["consistent"] = consistent(r);
    return j;
  };
  bool ok = true;
  if (src.kind == SourceKind::random) {
    out["seed"] = o.seed;
    out["generic"] = o.generic;
    const auto ts = app::random_tuples(o.random, o.seed, o.generic);
    std::vector<cubic::SingularityReport> reps(ts.size());
    const int n = static_cast<int>(ts.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) reps[i] = cubic::analyze(weyl::theta(ts[i]));
    Json trials = Json::array();
    for (int i = 0; i < n; ++i) {
      Json j = one(reps[i]);
      ok = ok && consistent(reps[i]);
      trials.push_back({{"index", i}, {"t", io::to_json(ts[i])}, {"result", j}});
    }
    out["trials"] = trials;
  } else {
    cubic::SingularityReport r;
    if (src.kind == SourceKind::t) {
      out["t"] = io::to_json(src.t);
      out["s"] = io::to_json(weyl::theta(src.t));
      r = cubic::analyze(weyl::theta(src.t));
    } else if (src.kind == SourceKind::s) {
      out["s"] = io::to_json(src.s);
      r = cubic::analyze(src.s);
    } else {
      r = cubic::analyze(src.p);
    }
    ok = consistent(r);
    out["result"] = one(r);
  }
  out["passed"] = ok;
  return ok ? 0 : 1;
}

int cmd_surface(const Options& o, Json& out) {
  const Source src = resolve(o, {SourceKind::t, SourceKind::s, SourceKind::p});
  const cubic::CubicSurface S = surface_of(src);
  if (src.kind == SourceKind::t) out["t"] = io::to_json(src.t);
  out["surface"] = io::to_json(S);
  const cubic::BracketTable b = cubic::bracket_table(S);
  out["brackets"] = {{"X1,X2", io::to_json(b.b12)}, {"X2,X3", io::to_json(b.b23)}, {"X3,X1", io::to_json(b.b31)}};
  out["brackets_text"] = {{"X1,X2", b.b12.str()}, {"X2,X3", b.b23.str()}, {"X3,X1", b.b31.str()}};
  return 0;
}

int cmd_act(const Options& o, Json& out) {
  const Source src = resolve(o, {SourceKind::t, SourceKind::s, SourceKind::p});
  if (o.word.empty()) throw InputError("--word is required");
  if (o.poly.empty()) throw InputError("--poly is required");
  std::vector<cubic::Action> word;
  Json names = Json::array();
  for (const auto& name : split_names(o.word)) {
    auto a = cubic::parse_action(name);
    if (!a) throw InputError("unknown generator '" + name + "' in --word");
    word.push_back(*a);
    names.push_back(cubic::action_name(*a));
  }
  cubic::MPoly f;
  try {
    f = cubic::parse_mpoly(o.poly);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad --poly: ") + e.what());
  }
  const cubic::CubicSurface S = surface_of(src);
  const cubic::ActionResult r = cubic::k_action(word, f, S);
  out["word"] = names;
  out["poly"] = io::to_json(f);
  out["source"] = io::to_json(S);
  out["target"] = io::to_json(r.target);
  out["result"] = io::to_json(r.poly.full());
  out["result_text"] = r.poly.full().str();
  return 0;
}

int cmd_hochschild(const Options& o, Json& out) {
  Rational q;
  try {
    q = parse_rational(o.q);
  } catch (const std::exception&) {
    throw InputError("malformed rational in --q");
  }
  hochschild::Window w;
  try {
    w = hochschild::Window::make(q, o.N);
    if (o.N < 6) throw std::invalid_argument("N must be at least 6 to compare with N - 2");
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out["q"] = io::to_json(q);
  out["N"] = o.N;
  Json stab = Json::array();
  hochschild::Dims dims[2];
  int i = 0;
  for (auto t : {hochschild::Twist::untwisted, hochschild::Twist::twisted}) {
    const auto rep = hochschild::homology_dims(w, t);
    dims[i++] = rep.dims;
    stab.push_back(io::to_json(rep));
  }
  const hochschild::Z2Result z = hochschild::z2_combine(w);
  Report checks = hochschild::complex_check(w, hochschild::Twist::untwisted);
  checks.append(hochschild::complex_check(w, hochschild::Twist::twisted));
  checks.append(hochschild::image_characterization_check(w));
  checks.append(z.checks);
  out["untwisted"] = io::to_json(dims[0]);
  out["twisted"] = io::to_json(dims[1]);
  out["combined"] = io::to_json(z.combined);
  out["invariants"] = {{"untwisted", io::to_json(z.untwisted_invariant)},
                       {"twisted", io::to_json(z.twisted_invariant)}};
  out["stabilization"] = stab;
  out["checks"] = io::to_json(checks)["checks"];
  out["passed"] = checks.passed();
  return checks.passed() ? 0 : 1;
}

void emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open output file " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the C^vC1 double affine Hecke algebra and its cubic surfaces"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* sub, bool random) {
    sub->add_option("--t", o.t, "parameters k0,k1,u0,u1 (rationals a or a/b)");
    sub->add_option("--s", o.s, "torus point s1,s2,s3,s4");
    sub->add_option("--delta", o.delta, "delta with s1 s2 s3 s4 = delta^2");
    sub->add_option("--p", o.p, "surface coefficients p1,p2,p3,p0");
    if (random) {
      sub->add_option("--random", o.random, "number of seeded random tuples")->check(CLI::PositiveNumber);
      sub->add_option("--seed", o.seed, "random seed");
    }
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
    sub->add_flag("--verbose", o.verbose, "progress on stderr");
  };

  CLI::App* verify = app.add_subcommand("verify", "operator identities, brackets and automorphisms");
  add_source(verify, true);
  add_common(verify);
  CLI::App* classify = app.add_subcommand("classify", "singular points of the cubic surface");
  add_source(classify, true);
  classify->add_flag("--generic", o.generic, "with --random: redraw tuples on singular strata");
  add_common(classify);
  CLI::App* surface = app.add_subcommand("surface", "R and the Poisson bracket table");
  add_source(surface, false);
  add_common(surface);
  CLI::App* act = app.add_subcommand("act", "apply a word in g1,g2,g3,sigma,tau,eta (rightmost first)");
  add_source(act, false);
  act->add_option("--word", o.word, "comma-separated letters");
  act->add_option("--poly", o.poly, "polynomial in X1, X2, X3");
  add_common(act);
  CLI::App* hh = app.add_subcommand("hochschild", "windowed Hochschild homology of the quantum torus");
  hh->add_option("--q", o.q, "rational q with |q| != 1");
  hh->add_option("--N", o.N, "window radius");
  add_common(hh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json out;
  out["command"] = sub->get_name();
  int code = 0;
  try {
    if (sub == verify) code = cmd_verify(o, out);
    if (sub == classify) code = cmd_classify(o, out);
    if (sub == surface) code = cmd_surface(o, out);
    if (sub == act) code = cmd_act(o, out);
    if (sub == hh) code = cmd_hochschild(o, out);
  } catch (const InputError& e) {
    out["error"] = e.what();
    code = 2;
  } catch (const std::invalid_argument& e) {
    out["error"] = e.what();
    code = 2;
  } catch (const std::exception& e) {
    out["error"] = e.what();
    code = 1;
  }
  try {
    emit(out, o.out);
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (code != 0 && out.contains("error")) std::cerr << "error: " << out["error"].get<std::string>() << "\n";
  return code;
}
