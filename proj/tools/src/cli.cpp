#include "dgres/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgres/conventions.hpp"
#include "dgres/error.hpp"
#include "dgres/io.hpp"

namespace dgres::cli {

namespace {

using Json = nlohmann::json;

struct Options {
  std::string field;
  std::optional<int> n;
  std::string window;
  std::optional<std::size_t> truncate;
  std::string out;
  std::string source;
  std::string target;
  std::vector<std::string> inputs;
};

struct Outcome {
  ExitCode code = Verified;
  Json result = Json::object();
};

std::string_view status_name(ExitCode code) {
  switch (code) {
    case Verified: return "verified";
    case Refuted: return "refuted";
    case Inconclusive: return "inconclusive";
    case InvalidInput: return "invalid-input";
  }
  return "?";
}

ExitCode from_verdict(Verdict v) {
  switch (v) {
    case Verdict::Yes: return Verified;
    case Verdict::No: return Refuted;
    case Verdict::Inconclusive: return Inconclusive;
  }
  return Inconclusive;
}

ExitCode worse(ExitCode a, ExitCode b) {
  auto rank = [](ExitCode c) { return c == Refuted ? 2 : c == Inconclusive ? 1 : 0; };
  return rank(b) > rank(a) ? b : a;
}

// Failures of a document's own laws, as opposed to malformed input.
bool is_law_violation(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquareZero:
    case ErrorKind::NotChainMap:
    case ErrorKind::LeibnizViolation:
    case ErrorKind::AssociativityViolation:
    case ErrorKind::UnitViolation:
    case ErrorKind::FunctorViolation:
    case ErrorKind::SemisimplicialIdentityViolation:
      return true;
    default:
      return false;
  }
}

ExitCode classify(const std::string& command, ErrorKind kind) {
  if (kind == ErrorKind::TruncationUnsound || kind == ErrorKind::InternalInvariant) return Inconclusive;
  if (command == "validate" && is_law_violation(kind)) return Refuted;
  return InvalidInput;
}

std::optional<std::pair<int, int>> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto colon = text.find(':', 1);
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    int a = std::stoi(lo, &used_lo);
    int b = std::stoi(hi, &used_hi);
    if (used_lo != lo.size() || used_hi != hi.size() || b < a) throw std::invalid_argument(text);
    return std::pair{a, b};
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "--window expects <lo>:<hi> with lo <= hi, got '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ranks_json(const std::map<int, std::size_t>& ranks) {
  Json out = Json::object();
  for (const auto& [q, r] : ranks) {
    if (r != 0) out[std::to_string(q)] = r;
  }
  return out;
}

Json comb(const DgCategory& cat, std::size_t x, std::size_t y, const Vector& v) { return io::combination(cat, x, y, v); }

Json cochain_json(const SimplicialCochain& a) {
  Json out = Json::object();
  const SimplexIndex& idx = a.index();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (is_zero(a.component(i))) continue;
    MultiIndex I = idx.at(i);
    out[I.to_string()] = comb(a.cat(), a.source().at(I.first()), a.target().at(I.last()), a.component(i));
  }
  return out;
}

Json sset_cochain_json(const SSetCochain& a) {
  Json out = Json::object();
  const FiniteSSet& K = *a.sset();
  for (std::size_t i = 0; i < K.total_cells(); ++i) {
    if (is_zero(a.component(i))) continue;
    CellRef c = K.cell_at(i);
    out[std::to_string(c.dim) + ":" + std::to_string(c.index)] =
        comb(a.cat(), a.source().at(K.first_vertex(c.dim, c.index)), a.target().at(K.last_vertex(c.dim, c.index)), a.component(i));
  }
  return out;
}

Json certificate_json(const DgCategory& cat, const InvertibilityCertificate& c) {
  return Json{{"forward", comb(cat, c.x, c.y, c.forward)},
              {"backward", comb(cat, c.y, c.x, c.backward)},
              {"left_homotopy", comb(cat, c.x, c.x, c.left_homotopy)},
              {"right_homotopy", comb(cat, c.y, c.y, c.right_homotopy)}};
}

Json invertibility_json(const DgCategory& cat, const InvertibilityResult& r) {
  Json j{{"verdict", to_string(r.verdict)}};
  if (r.certificate) j["certificate"] = certificate_json(cat, *r.certificate);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json labels_json(const DgCategory& cat, const std::vector<std::size_t>& objects) {
  Json out = Json::array();
  for (auto o : objects) out.push_back(cat.label(o));
  return out;
}

Json window_json(const ChainComplex& c) { return Json::array({c.lo(), c.hi()}); }

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt), reader_(opt.field.empty() ? std::nullopt : std::optional<Field>(Field::from_name(opt.field))) {}

  io::Document load(std::size_t i) { return reader_.parse(read_file(opt_.inputs.at(i))); }

  std::vector<io::Document> load_all(std::size_t min, std::size_t max) {
    if (opt_.inputs.size() < min || opt_.inputs.size() > max) {
      fail(ErrorKind::ShapeError, "expected " + (min == max ? std::to_string(min) : std::to_string(min) + " to " + std::to_string(max)) +
                                      " input documents, got " + std::to_string(opt_.inputs.size()));
    }
    std::vector<io::Document> docs;
    for (std::size_t i = 0; i < opt_.inputs.size(); ++i) docs.push_back(load(i));
    return docs;
  }

  Field field() const { return opt_.field.empty() ? Field::rationals() : Field::from_name(opt_.field); }

 private:
  const Options& opt_;
  io::DocumentReader reader_;
};

[[noreturn]] void wrong_kind(const io::Document& doc, std::string_view expected) {
  fail(ErrorKind::IncompatibleData, "expected " + std::string(expected) + ", got " + std::string(io::to_string(doc.kind)));
}

// ---- commands ----

Outcome cmd_validate(Session& s, const Options&) {
  auto docs = s.load_all(1, 1);
  const io::Document& doc = docs[0];
  Outcome o;
  o.result["kind"] = std::string(io::to_string(doc.kind));
  switch (doc.kind) {
    case io::DocumentKind::MCObject: {
      const auto& x = std::get<MCObject>(doc.payload);
      MCValidation v = mc_validate(x);
      o.result["n"] = x.n();
      o.result["objects"] = labels_json(x.cat(), x.objects());
      o.result["residual_zero"] = v.residual_zero;
      if (!v.residual_zero) {
        o.result["residual"] = cochain_json(mc_residual(x));
        o.result["residual_location"] = v.first_bad->to_string();
        o.code = Refuted;
      }
      Json edges = Json::array();
      for (const auto& e : v.edges) {
        Json j = invertibility_json(x.cat(), e.invertibility);
        j["edge"] = MultiIndex::from_entries({e.i, e.i + 1}).to_string();
        edges.push_back(j);
        o.code = worse(o.code, from_verdict(e.invertibility.verdict));
      }
      o.result["edges"] = edges;
      o.result["valid"] = v.valid;
      break;
    }
    case io::DocumentKind::LocalSystem: {
      const auto& x = std::get<LocalSystem>(doc.payload);
      LSValidation v = ls_validate(x);
      o.result["objects"] = labels_json(x.cat(), x.objects());
      o.result["residual_zero"] = v.residual_zero;
      if (!v.residual_zero) {
        o.result["residual"] = sset_cochain_json(ls_residual(x));
        o.result["residual_location"] = std::to_string(v.first_bad->dim) + ":" + std::to_string(v.first_bad->index);
        o.code = Refuted;
      }
      Json edges = Json::array();
      for (const auto& e : v.edges) {
        Json j = invertibility_json(x.cat(), e.invertibility);
        j["edge"] = "1:" + std::to_string(e.cell);
        edges.push_back(j);
        o.code = worse(o.code, from_verdict(e.invertibility.verdict));
      }
      o.result["edges"] = edges;
      o.result["valid"] = v.valid;
      break;
    }
    case io::DocumentKind::DgCategory: {
      const auto& cat = *std::get<DgCategoryPtr>(doc.payload);
      o.result["objects"] = cat.labels();
      o.result["valid"] = true;
      break;
    }
    case io::DocumentKind::SimplicialSet: {
      const auto& k = std::get<FiniteSSet>(doc.payload);
      o.result["counts"] = k.counts();
      o.result["valid"] = true;
      break;
    }
    case io::DocumentKind::Functor:
    case io::DocumentKind::AdjunctionData:
      o.result["valid"] = true;
      break;
  }
  return o;
}

Outcome cmd_homology(Session& s, const Options& opt) {
  auto docs = s.load_all(1, 1);
  const io::Document& doc = docs[0];
  auto window = parse_window(opt.window);
  Outcome o;
  o.result["kind"] = std::string(io::to_string(doc.kind));
  if (doc.kind == io::DocumentKind::DgCategory) {
    const auto& cat = *std::get<DgCategoryPtr>(doc.payload);
    Json homs = Json::array();
    for (std::size_t x = 0; x < cat.num_objects(); ++x) {
      for (std::size_t y = 0; y < cat.num_objects(); ++y) {
        homs.push_back({{"source", cat.label(x)}, {"target", cat.label(y)}, {"ranks", ranks_json(homology_ranks(cat.hom(x, y)))}});
      }
    }
    o.result["homs"] = homs;
  } else if (doc.kind == io::DocumentKind::MCObject) {
    const auto& x = std::get<MCObject>(doc.payload);
    MCHomComplex h = hom_complex_mc(x, x, window);
    o.result["dimension"] = h.complex.total_dim();
    o.result["window"] = window_json(h.complex);
    o.result["ranks"] = ranks_json(homology_ranks(h.complex));
  } else if (doc.kind == io::DocumentKind::LocalSystem) {
    const auto& x = std::get<LocalSystem>(doc.payload);
    LSHomComplex h = ls_hom_complex(x, x, window);
    o.result["dimension"] = h.complex.total_dim();
    o.result["window"] = window_json(h.complex);
    o.result["ranks"] = ranks_json(homology_ranks(h.complex));
  } else {
    wrong_kind(doc, "a dg-category, mc-object or local-system document");
  }
  return o;
}

Outcome cmd_resolve(Session& s, const Options& opt) {
  auto docs = s.load_all(1, 2);
  auto window = parse_window(opt.window);
  Outcome o;
  if (docs[0].kind == io::DocumentKind::DgCategory) {
    if (docs.size() != 1) fail(ErrorKind::ShapeError, "resolve takes one dg-category document");
    if (!opt.n) fail(ErrorKind::ShapeError, "resolve on a dg-category needs --n");
    if (*opt.n < 0) fail(ErrorKind::ShapeError, "--n must be non-negative");
    const DgCategoryPtr& cat = std::get<DgCategoryPtr>(docs[0].payload);
    std::vector<std::size_t> sources, targets;
    for (std::size_t x = 0; x < cat->num_objects(); ++x) {
      sources.push_back(x);
      targets.push_back(x);
    }
    if (!opt.source.empty()) sources = {cat->object_index(opt.source)};
    if (!opt.target.empty()) targets = {cat->object_index(opt.target)};
    Json pairs = Json::array();
    for (auto x : sources) {
      for (auto y : targets) {
        MCHomComplex h = hom_complex_mc(iota(cat, x, *opt.n), iota(cat, y, *opt.n), window);
        bool quasi = is_quasi_iso(iota_hom_map(cat, x, y, *opt.n, window));
        if (!quasi) o.code = Refuted;
        pairs.push_back({{"source", cat->label(x)},
                         {"target", cat->label(y)},
                         {"dimension", h.complex.total_dim()},
                         {"window", window_json(h.complex)},
                         {"ranks", ranks_json(homology_ranks(h.complex))},
                         {"base_ranks", ranks_json(homology_ranks(cat->hom(x, y)))},
                         {"iota_quasi_iso", quasi}});
      }
    }
    o.result["n"] = *opt.n;
    o.result["objects"] = "iota";
    o.result["pairs"] = pairs;
    return o;
  }
  for (const auto& d : docs) {
    if (d.kind != io::DocumentKind::MCObject) wrong_kind(d, "mc-object documents or one dg-category document");
  }
  const auto& x = std::get<MCObject>(docs[0].payload);
  const auto& y = std::get<MCObject>(docs.back().payload);
  if (opt.n && *opt.n != x.n()) fail(ErrorKind::IncompatibleData, "--n " + std::to_string(*opt.n) + " does not match the document level " + std::to_string(x.n()));
  for (const MCObject* m : {&x, &y}) {
    MCValidation v = mc_validate(*m);
    if (!v.residual_zero) fail(ErrorKind::IncompatibleData, "input is not a Maurer-Cartan object: residual at " + v.first_bad->to_string());
  }
  MCHomComplex h = hom_complex_mc(x, y, window);
  o.result["n"] = x.n();
  o.result["objects"] = "documents";
  o.result["pairs"] = Json::array({Json{{"source", labels_json(x.cat(), x.objects())},
                                        {"target", labels_json(y.cat(), y.objects())},
                                        {"dimension", h.complex.total_dim()},
                                        {"window", window_json(h.complex)},
                                        {"ranks", ranks_json(homology_ranks(h.complex))}}});
  return o;
}

Outcome cmd_cotensor(Session& s, const Options& opt) {
  auto docs = s.load_all(1, 2);
  for (const auto& d : docs) {
    if (d.kind != io::DocumentKind::LocalSystem) wrong_kind(d, "local-system documents");
  }
  const auto& x = std::get<LocalSystem>(docs[0].payload);
  const auto& y = std::get<LocalSystem>(docs.back().payload);
  for (const LocalSystem* m : {&x, &y}) {
    LSValidation v = ls_validate(*m);
    if (!v.residual_zero) {
      fail(ErrorKind::IncompatibleData, "input is not a Maurer-Cartan object: residual at " + std::to_string(v.first_bad->dim) + ":" +
                                            std::to_string(v.first_bad->index));
    }
  }
  LSHomComplex h = ls_hom_complex(x, y, parse_window(opt.window));
  Outcome o;
  o.result["cells"] = x.sset()->counts();
  o.result["source"] = labels_json(x.cat(), x.objects());
  o.result["target"] = labels_json(y.cat(), y.objects());
  o.result["dimension"] = h.complex.total_dim();
  o.result["window"] = window_json(h.complex);
  o.result["ranks"] = ranks_json(homology_ranks(h.complex));
  return o;
}

Outcome cmd_strictify(Session& s, const Options&) {
  auto docs = s.load_all(1, 1);
  if (docs[0].kind != io::DocumentKind::MCObject) wrong_kind(docs[0], "an mc-object document");
  const auto& x = std::get<MCObject>(docs[0].payload);
  MCValidation v = mc_validate(x);
  if (!v.residual_zero) fail(ErrorKind::IncompatibleData, "input is not a Maurer-Cartan object: residual at " + v.first_bad->to_string());
  Strictification st = strictify(x);
  Outcome o;
  Json steps = Json::array();
  for (const auto& step : st.steps) {
    StepCheck c = check_step(step);
    steps.push_back({{"h_closed", c.h_closed}, {"h_inv_closed", c.h_inv_closed}, {"left_inverse", c.left_inverse}, {"right_inverse", c.right_inverse}});
    if (!c.ok()) o.code = Refuted;
  }
  o.result["n"] = x.n();
  o.result["objects"] = labels_json(x.cat(), x.objects());
  o.result["steps"] = steps;
  o.result["eta"] = cochain_json(st.result.eta());
  o.result["composite"] = cochain_json(st.composite.a);
  o.result["composite_inverse"] = cochain_json(st.composite_inv.a);
  o.result["composite_closed"] = is_closed(st.composite) && is_closed(st.composite_inv);
  if (!o.result["composite_closed"].get<bool>()) o.code = Refuted;
  return o;
}

Outcome cmd_adjoin(Session& s, const Options& opt) {
  auto docs = s.load_all(1, 1);
  if (docs[0].kind != io::DocumentKind::AdjunctionData) wrong_kind(docs[0], "an adjunction-data document");
  AdjunctionData data = std::get<AdjunctionData>(docs[0].payload);
  if (opt.truncate) {
    if (*opt.truncate < 1) fail(ErrorKind::ShapeError, "--truncate must be at least 1");
    data.truncation = *opt.truncate;
  }
  TruncatedDgCategory t = free_adjoin(data);
  const DgCategory& cat = *t.category;
  Outcome o;
  o.result["n"] = data.n;
  o.result["x"] = data.base->label(data.x);
  o.result["y"] = data.base->label(data.y);
  o.result["truncation"] = t.truncation;
  o.result["exact"] = t.exact;
  Json homs = Json::array();
  for (std::size_t c = 0; c < cat.num_objects(); ++c) {
    for (std::size_t d = 0; d < cat.num_objects(); ++d) {
      Json words = Json::array();
      for (const auto& w : t.hom_words(c, d)) words.push_back(describe_word(data, w));
      Json dims = Json::object();
      for (const auto& [q, n] : cat.hom(c, d).dims()) {
        if (n != 0) dims[std::to_string(q)] = n;
      }
      homs.push_back({{"source", cat.label(c)},
                      {"target", cat.label(d)},
                      {"dims", dims},
                      {"ranks", ranks_json(homology_ranks(cat.hom(c, d)))},
                      {"words", words}});
    }
  }
  o.result["homs"] = homs;
  if (!t.exact) o.result["note"] = "truncated: only words with at most " + std::to_string(t.truncation) + " letters f";
  return o;
}

Outcome cmd_qequiv(Session& s, const Options&) {
  auto docs = s.load_all(1, 1);
  if (docs[0].kind != io::DocumentKind::Functor) wrong_kind(docs[0], "a functor document");
  const auto& f = std::get<DgFunctor>(docs[0].payload);
  QuasiEquivalenceReport r = is_quasi_equivalence(f);
  const DgCategory& src = *f.source();
  const DgCategory& tgt = *f.target();
  Outcome o;
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"source", src.label(p.x)}, {"target", src.label(p.y)}, {"quasi_iso", p.quasi_iso}, {"cone_ranks", ranks_json(p.cone_ranks)}});
  }
  Json objects = Json::array();
  for (const auto& e : r.objects) {
    Json j{{"object", tgt.label(e.target_object)}};
    j["preimage"] = e.source_object ? Json(src.label(*e.source_object)) : Json(nullptr);
    if (e.certificate) j["certificate"] = certificate_json(tgt, *e.certificate);
    objects.push_back(j);
  }
  o.result["pairs"] = pairs;
  o.result["objects"] = objects;
  o.result["fully_faithful"] = r.fully_faithful;
  o.result["essentially_surjective"] = r.essentially_surjective;
  o.result["verdict"] = to_string(r.verdict);
  o.code = from_verdict(r.verdict);
  return o;
}

std::string render(const std::string& command, const Outcome& o, const std::optional<Json>& error) {
  Json report{{"command", command},
              {"conventions", std::string(kConventionsTag)},
              {"format_version", std::string(io::kFormatVersion)},
              {"status", std::string(status_name(o.code))},
              {"result", o.result}};
  if (error) report["error"] = *error;
  return report.dump(2) + "\n";
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) fail(ErrorKind::ParseError, "cannot write '" + opt.out + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact checks for Maurer-Cartan resolutions, cotensors and pushouts of dg-categories", "dgres"};
  app.require_subcommand(1);

  using Handler = std::function<Outcome(Session&, const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h, bool window, bool n, bool pair) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", opt.inputs, "Input documents")->required();
    sub->add_option("--field", opt.field, "Ground field: q or fp:<p>");
    sub->add_option("--out", opt.out, "Write the report to this path");
    if (window) sub->add_option("--window", opt.window, "Degree window <lo>:<hi> (use --window=<lo>:<hi> for negative lo)");
    if (n) sub->add_option("--n", opt.n, "Simplicial level");
    if (pair) {
      sub->add_option("--source", opt.source, "Source object label");
      sub->add_option("--target", opt.target, "Target object label");
    }
    commands.emplace_back(sub, std::move(h));
  };
  add("validate", "Check a document's laws; MC objects also get their residual and edge invertibility", cmd_validate, false, false, false);
  add("homology", "Homology ranks of hom complexes", cmd_homology, true, false, false);
  add("resolve", "Hom complexes of the level-n resolution, for MC objects or the inclusion of a category", cmd_resolve, true, true, true);
  add("cotensor", "Hom complexes of local systems over a simplicial set", cmd_cotensor, true, false, false);
  add("strictify", "Gauge an MC object to one with no higher components", cmd_strictify, false, false, false);
  CLI::App* adjoin = app.add_subcommand("adjoin", "Freely adjoin a morphism f with df = g");
  adjoin->add_option("inputs", opt.inputs, "Adjunction-data document")->required();
  adjoin->add_option("--field", opt.field, "Ground field: q or fp:<p>");
  adjoin->add_option("--out", opt.out, "Write the report to this path");
  adjoin->add_option("--truncate", opt.truncate, "Maximal number of letters f");
  commands.emplace_back(adjoin, cmd_adjoin);
  add("qequiv", "Decide whether a functor is a quasi-equivalence", cmd_qequiv, false, false, false);

  std::string fixture;
  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "Print a standard category document (unit_k, sphere, disk)");
  fixtures_cmd->add_option("name", fixture, "Fixture name")->required();
  fixtures_cmd->add_option("--n", opt.n, "Degree parameter");
  fixtures_cmd->add_option("--field", opt.field, "Ground field: q or fp:<p>");
  fixtures_cmd->add_option("--out", opt.out, "Write the document to this path");

  std::vector<std::string> argv_store{"dgres"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  std::string command = "?";
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Verified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Verified;
  } catch (const CLI::ParseError& e) {
    for (const auto& sc : app.get_subcommands()) command = sc->get_name();
    err << "dgres: " << e.what() << "\n";
    out << render(command, Outcome{InvalidInput, Json::object()}, Json{{"kind", "UsageError"}, {"message", e.what()}});
    return InvalidInput;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  command = chosen->get_name();
  try {
    if (chosen == fixtures_cmd) {
      const Field field = opt.field.empty() ? Field::rationals() : Field::from_name(opt.field);
      emit(opt, io::print_document(io::make_document(fixtures::by_name(fixture, field, opt.n.value_or(0)))), out);
      return Verified;
    }
    Session session(opt);
    for (const auto& [sub, handler] : commands) {
      if (sub != chosen) continue;
      Outcome o = handler(session, opt);
      emit(opt, render(command, o, std::nullopt), out);
      return o.code;
    }
    fail(ErrorKind::InternalInvariant, "unhandled command " + command);
  } catch (const Error& e) {
    const ExitCode code = classify(command, e.kind());
    err << "dgres " << command << ": " << e.what() << "\n";
    Outcome o{code, Json::object()};
    std::string text = render(command, o, Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.detail()}});
    try {
      emit(opt, text, out);
    } catch (const Error&) {
      out << text;
    }
    return code;
  } catch (const std::exception& e) {
    err << "dgres " << command << ": " << e.what() << "\n";
    out << render(command, Outcome{Inconclusive, Json::object()}, Json{{"kind", "Unexpected"}, {"message", e.what()}});
    return Inconclusive;
  }
}

}  // namespace dgres::cli
