#include "kzaut/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kzaut/autgroup.hpp"
#include "kzaut/errors.hpp"
#include "kzaut/ge2.hpp"
#include "kzaut/jacobian.hpp"
#include "kzaut/parse.hpp"
#include "kzaut/serialize.hpp"

namespace kzaut {

namespace {

using nlohmann::json;

struct Options {
  std::string order = "deglex";
  std::string priority = "z1z2";
  std::string field;
  bool json = false;
  bool linear_part = false;
};

struct Context {
  Options opt;
  std::ostream& out;
  std::ostream& err;

  std::optional<Field> field() const {
    if (opt.field.empty()) return std::nullopt;
    return Field::parse(opt.field);
  }

  MonomialOrder order() const {
    std::vector<std::size_t> pri = opt.priority == "z2z1" ? std::vector<std::size_t>{1, 0}
                                                          : std::vector<std::size_t>{0, 1};
    return MonomialOrder(opt.order == "lex" ? MonomialOrder::Kind::Lex : MonomialOrder::Kind::DegLex, pri);
  }

  json header(const std::string& command, const Field& f) const {
    return {{"command", command}, {"field", f.to_string()}, {"order", opt.order}, {"priority", opt.priority}};
  }

  void emit(const json& j) const { out << j.dump(2) << '\n'; }
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& src) {
  std::stringstream ss;
  if (src == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(src);
  if (!in) throw InputError("cannot open '" + src + "'");
  ss << in.rdbuf();
  return ss.str();
}

KzEndo load(const Context& ctx, const std::string& src) {
  const std::string prefix = "builtin:";
  if (src.rfind(prefix, 0) == 0) return builtin(src.substr(prefix.size()), ctx.field().value_or(Field::rationals()));
  try {
    return parse_endo(read_source(src), ctx.field());
  } catch (const ParseError& e) {
    throw InputError(src + ":" + e.what());
  }
}

std::string ring_label(const Ring& r) {
  std::string s = r.field.is_rational() ? "Q" : "GF(" + std::to_string(r.field.characteristic()) + ")";
  s += '[';
  for (std::size_t k = 0; k < r.vars.size(); ++k) s += (k ? "," : "") + r.vars[k];
  return s + ']';
}

// Applies --linear-part; without it a nonlinear input is an error.
KzEndo linear_input(const Context& ctx, const KzEndo& phi) {
  if (is_x_linear(phi)) return phi;
  if (!ctx.opt.linear_part) {
    linear_profile(phi);  // throws NotXLinear with the offending term
  }
  (ctx.opt.json ? ctx.err : ctx.out)
      << "note: using the x-linear part only; the verdict is a necessary condition for the full map\n";
  return linear_part(phi);
}

json images_json(const KzEndo& phi) {
  json j = json::object();
  for (std::size_t k = 0; k < phi.n(); ++k) j[phi.algebra()->x_names[k]] = phi.image(k).to_string();
  return j;
}

std::string verdict_name(const TameVerdict& v) {
  if (std::holds_alternative<Tame>(v)) return "TAME";
  if (std::holds_alternative<Wild>(v)) return "WILD";
  return "TAME_BY_THEOREM";
}

// --- subcommands ---

int cmd_jacobian(const Context& ctx, const std::string& src) {
  const KzEndo phi = load(ctx, src);
  if (!is_x_linear(phi) && !ctx.opt.linear_part) {
    // Dicks-Lewin matrix with tensor entries
    const TensorMatrix jac = jacobian_full(phi);
    const Algebra& alg = *phi.algebra();
    if (ctx.opt.json) {
      json j = ctx.header("jacobian", alg.field);
      json rows = json::array();
      for (const auto& row : jac) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.to_string());
        rows.push_back(r);
      }
      j["linear"] = false;
      j["tensor"] = rows;
      ctx.emit(j);
      return kExitOk;
    }
    ctx.out << "nonlinear input; entries in F^op (x) F, written (u|v) for u (x) v\n";
    for (std::size_t i = 0; i < jac.size(); ++i)
      for (std::size_t j = 0; j < jac.size(); ++j)
        ctx.out << "d " << alg.x_names[j] << "' / d " << alg.x_names[i] << " = " << jac[i][j].to_string() << '\n';
    return kExitOk;
  }
  const KzEndo lin = linear_input(ctx, phi);
  const PolyMatrix jac = jacobian_linear(lin);
  const CommPoly d = det(jac);
  if (ctx.opt.json) {
    json j = ctx.header("jacobian", jac.ring()->field);
    j["linear"] = true;
    j["ring"] = jac.ring()->vars;
    j["matrix"] = matrix_to_json(jac);
    j["determinant"] = d.to_string();
    ctx.emit(j);
    return kExitOk;
  }
  ctx.out << "ring: " << ring_label(*jac.ring()) << '\n' << matrix_to_text(jac) << "det: " << d.to_string() << '\n';
  return kExitOk;
}

int cmd_check(const Context& ctx, const std::string& src) {
  const KzEndo phi = linear_input(ctx, load(ctx, src));
  const PolyMatrix jac = jacobian_linear(phi);
  const CommPoly d = det(jac);
  const bool ok = is_gl(jac);
  if (ctx.opt.json) {
    json j = ctx.header("check", jac.ring()->field);
    j["ring"] = jac.ring()->vars;
    j["matrix"] = matrix_to_json(jac);
    j["determinant"] = d.to_string();
    j["verdict"] = ok ? "AUTOMORPHISM" : "NOT_AUTOMORPHISM";
    ctx.emit(j);
  } else {
    ctx.out << "automorphism: " << (ok ? "yes" : "no") << "\ndet: " << d.to_string() << '\n';
  }
  return ok ? kExitOk : kExitNotAutomorphism;
}

// Prints the not-an-automorphism verdict; returns true when it did.
bool reject_non_automorphism(const Context& ctx, const std::string& command, const PolyMatrix& jac) {
  if (is_gl(jac)) return false;
  const CommPoly d = det(jac);
  if (ctx.opt.json) {
    json j = ctx.header(command, jac.ring()->field);
    j["ring"] = jac.ring()->vars;
    j["matrix"] = matrix_to_json(jac);
    j["determinant"] = d.to_string();
    j["verdict"] = "NOT_AUTOMORPHISM";
    ctx.emit(j);
  } else {
    ctx.out << "verdict: NOT_AUTOMORPHISM\ndet: " << d.to_string() << '\n';
  }
  return true;
}

int cmd_tame(const Context& ctx, const std::string& src, const std::string& command) {
  const KzEndo phi = linear_input(ctx, load(ctx, src));
  const PolyMatrix jac = jacobian_linear(phi);
  if (reject_non_automorphism(ctx, command, jac)) return kExitNotAutomorphism;
  const TameVerdict v = is_tame(phi, ctx.order());
  const Algebra& alg = *phi.algebra();
  const int code = std::holds_alternative<Tame>(v)   ? kExitOk
                   : std::holds_alternative<Wild>(v) ? kExitWild
                                                     : kExitNoTranscript;
  if (ctx.opt.json) {
    json j = ctx.header(command, alg.field);
    j["ring"] = jac.ring()->vars;
    j["matrix"] = matrix_to_json(jac);
    j["determinant"] = det(jac).to_string();
    j["verdict"] = verdict_name(v);
    if (const auto* t = std::get_if<Tame>(&v)) {
      j["target"] = matrix_to_json(jac);
      j["transcript"] = transcript_to_json(t->transcript);
      j["auto_factors"] = auto_factors_to_json(t->factors, alg);
    } else if (const auto* w = std::get_if<Wild>(&v)) {
      j["witness"] = matrix_to_json(w->witness);
    }
    ctx.emit(j);
    return code;
  }
  ctx.out << "verdict: " << verdict_name(v) << '\n';
  if (const auto* t = std::get_if<Tame>(&v)) {
    if (command == "tame") ctx.out << "transcript:\n" << transcript_to_text(t->transcript);
    ctx.out << "factors:\n" << auto_factors_to_text(t->factors, alg);
    if (command == "decompose")
      ctx.out << "recomposes: " << (recompose(t->factors, phi.algebra()) == phi ? "yes" : "no") << '\n';
  } else if (const auto* w = std::get_if<Wild>(&v)) {
    ctx.out << "witness:\n" << matrix_to_text(w->witness);
  } else {
    ctx.out << "no transcript found; tame for three or more variables regardless\n";
  }
  return code;
}

int cmd_invert(const Context& ctx, const std::string& src) {
  const KzEndo phi = linear_input(ctx, load(ctx, src));
  const PolyMatrix jac = jacobian_linear(phi);
  if (reject_non_automorphism(ctx, "invert", jac)) return kExitNotAutomorphism;
  const KzEndo inv = invert_linear(phi);
  if (ctx.opt.json) {
    json j = ctx.header("invert", phi.algebra()->field);
    j["images"] = images_json(inv);
    ctx.emit(j);
  } else {
    ctx.out << print_endo(inv);
  }
  return kExitOk;
}

int cmd_compose(const Context& ctx, const std::string& a, const std::string& b) {
  const KzEndo phi = load(ctx, a);
  const KzEndo psi = load(ctx, b);
  if (!(*phi.algebra() == *psi.algebra())) throw ContextError("the two maps live on different algebras");
  const KzEndo chi = compose(phi, psi);
  if (ctx.opt.json) {
    json j = ctx.header("compose", phi.algebra()->field);
    j["images"] = images_json(chi);
    ctx.emit(j);
  } else {
    ctx.out << print_endo(chi);
  }
  return kExitOk;
}

int cmd_abelianize(const Context& ctx, const std::string& src) {
  const KzEndo phi = linear_input(ctx, load(ctx, src));
  const AbelianizedEndo ab = abelianize_endo(phi);
  const Algebra& alg = *phi.algebra();
  if (!is_gl(ab.jacobian)) {
    if (reject_non_automorphism(ctx, "abelianize", ab.jacobian)) return kExitNotAutomorphism;
  }
  std::optional<Transcript> t;
  if (phi.n() == 2) t = abelianized_tame_decomposition(phi).transcript;
  if (ctx.opt.json) {
    json j = ctx.header("abelianize", alg.field);
    json imgs = json::object();
    for (std::size_t k = 0; k < phi.n(); ++k) imgs[alg.x_names[k]] = ab.images[k].to_string();
    j["images"] = imgs;
    j["ring"] = ab.jacobian.ring()->vars;
    j["matrix"] = matrix_to_json(ab.jacobian);
    j["determinant"] = det(ab.jacobian).to_string();
    if (t) {
      j["verdict"] = "TAME";
      j["target"] = matrix_to_json(ab.jacobian);
      j["transcript"] = transcript_to_json(*t);
    }
    ctx.emit(j);
    return kExitOk;
  }
  ctx.out << "induced map of " << ring_label(*ab.ring) << ":\n";
  for (std::size_t k = 0; k < phi.n(); ++k) ctx.out << alg.x_names[k] << " -> " << ab.images[k].to_string() << '\n';
  ctx.out << "jacobian over " << ring_label(*ab.jacobian.ring()) << ":\n" << matrix_to_text(ab.jacobian);
  if (t) ctx.out << "transcript:\n" << transcript_to_text(*t);
  return kExitOk;
}

int cmd_stabilize(const Context& ctx, const std::string& src) {
  const KzEndo phi = linear_input(ctx, load(ctx, src));
  const PolyMatrix jac = jacobian_linear(phi);
  if (reject_non_automorphism(ctx, "stabilize", jac)) return kExitNotAutomorphism;
  const auto st = stable_tame(phi, ctx.order());
  if (ctx.opt.json) {
    json j = ctx.header("stabilize", phi.algebra()->field);
    j["ring"] = jac.ring()->vars;
    j["matrix"] = matrix_to_json(jac);
    j["determinant"] = det(jac).to_string();
    if (st) {
      j["verdict"] = "STABLY_TAME";
      j["method"] = to_string(st->stabilization.method);
      j["target"] = matrix_to_json(jac.embed(3));
      j["transcript"] = transcript_to_json(st->stabilization.transcript);
      j["auto_factors"] = auto_factors_to_json(st->factors, *st->extended);
      j["extended_vars"] = st->extended->x_names;
    } else {
      j["verdict"] = "UNKNOWN";
    }
    ctx.emit(j);
    return st ? kExitOk : kExitNoTranscript;
  }
  if (!st) {
    ctx.out << "verdict: UNKNOWN\nno 3x3 factorization found\n";
    return kExitNoTranscript;
  }
  const Algebra& ext = *st->extended;
  ctx.out << "verdict: STABLY_TAME\nmethod: " << to_string(st->stabilization.method) << '\n';
  ctx.out << "transcript (3x3 over " << ring_label(*jac.ring()) << "):\n"
          << transcript_to_text(st->stabilization.transcript);
  ctx.out << "factors over";
  for (const auto& n : ext.x_names) ctx.out << ' ' << n;
  ctx.out << ":\n" << auto_factors_to_text(st->factors, ext);
  return kExitOk;
}

int cmd_example(const Context& ctx, const std::string& name) {
  if (name.empty()) {
    for (const auto& n : builtin_names()) ctx.out << n << '\n';
    return kExitOk;
  }
  const KzEndo phi = builtin(name, ctx.field().value_or(Field::rationals()));
  if (ctx.opt.json) {
    json j = ctx.header("example", phi.algebra()->field);
    j["name"] = name;
    j["images"] = images_json(phi);
    ctx.emit(j);
  } else {
    ctx.out << print_endo(phi);
  }
  return kExitOk;
}

int cmd_verify(const Context& ctx, const std::string& src) {
  json j;
  try {
    j = json::parse(read_source(src));
  } catch (const json::exception& e) {
    throw InputError(src + ": " + e.what());
  }
  if (!j.contains("transcript") || !j.contains("target"))
    throw InputError(src + ": no transcript/target pair to verify");
  const Transcript t = transcript_from_json(j.at("transcript"));
  const PolyMatrix target = matrix_from_json(j.at("target"), t.ring);
  const bool ok = verify_transcript(t, target);
  if (ctx.opt.json) {
    json r = ctx.header("verify", t.ring->field);
    r["verified"] = ok;
    r["factors"] = t.factors.size();
    ctx.emit(r);
  } else {
    ctx.out << "verified: " << (ok ? "yes" : "no") << " (" << t.factors.size() << " factors)\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear K[z]-automorphisms of free algebras: Jacobians, tameness, stable tameness."};
  app.name("kzaut");
  app.require_subcommand(1);
  Options opt;
  app.add_option("--order", opt.order, "monomial order for leading terms")
      ->check(CLI::IsMember({"deglex", "lex"}));
  app.add_option("--priority", opt.priority, "variable priority: z1z2 (z1 > z2) or z2z1")
      ->check(CLI::IsMember({"z1z2", "z2z1"}));
  app.add_option("--field", opt.field, "coefficient field: q or fp:<prime>");
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--linear-part", opt.linear_part, "analyse the x-linear part of a nonlinear map");

  std::string input, second, name;
  auto sub = [&](const char* n, const char* desc) {
    CLI::App* s = app.add_subcommand(n, desc);
    s->fallthrough();
    return s;
  };
  auto* jac = sub("jacobian", "print the Jacobian matrix and its determinant");
  jac->add_option("input", input, "endo file, '-' or builtin:<name>")->required();
  auto* check = sub("check", "decide whether the map is an automorphism");
  check->add_option("input", input)->required();
  auto* tame = sub("tame", "decide tameness; prints a transcript or a wildness witness");
  tame->add_option("input", input)->required();
  auto* decompose = sub("decompose", "factor a tame automorphism into elementary automorphisms");
  decompose->add_option("input", input)->required();
  auto* invert = sub("invert", "inverse of a linear automorphism");
  invert->add_option("input", input)->required();
  auto* comp = sub("compose", "the map x -> A(B(x))");
  comp->add_option("A", input)->required();
  comp->add_option("B", second)->required();
  auto* abel = sub("abelianize", "induced map of the polynomial algebra and its factorization");
  abel->add_option("input", input)->required();
  auto* stab = sub("stabilize", "3x3 elementary factorization after adding a variable");
  stab->add_option("input", input)->required();
  auto* example = sub("example", "print a built-in map, or list them");
  example->add_option("name", name);
  auto* verify = sub("verify", "re-check the transcript of a --json result");
  verify->add_option("input", input)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx{opt, out, err};
  try {
    if (jac->parsed()) return cmd_jacobian(ctx, input);
    if (check->parsed()) return cmd_check(ctx, input);
    if (tame->parsed()) return cmd_tame(ctx, input, "tame");
    if (decompose->parsed()) return cmd_tame(ctx, input, "decompose");
    if (invert->parsed()) return cmd_invert(ctx, input);
    if (comp->parsed()) return cmd_compose(ctx, input, second);
    if (abel->parsed()) return cmd_abelianize(ctx, input);
    if (stab->parsed()) return cmd_stabilize(ctx, input);
    if (example->parsed()) return cmd_example(ctx, name);
    if (verify->parsed()) return cmd_verify(ctx, input);
  } catch (const NotXLinear& e) {
    err << "error: " << e.what() << " (use --linear-part to analyse the x-linear part)\n";
    return kExitUsage;
  } catch (const NotInvertible& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotAutomorphism;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kzaut
