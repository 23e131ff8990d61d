/*
 * Copyright 2026 The aitk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "ait/adjoint.hpp"
#include "ait/hyperelliptic.hpp"
#include "ait/integral.hpp"
#include "ait/pencil.hpp"
#include "ait/pfaffian.hpp"
#include "ait/quadspace.hpp"
#include "json_io.hpp"

namespace ait::cli {

namespace {

using io::json;
using io::member;
using io::SchemaError;

struct Options {
  std::string json_text;
  std::string f;
  long bound = 20;
  std::string point;
  std::uint64_t seed = 1;
  std::string primes;
  int k = -1;
};

class Context {
 public:
  Context(const Options& opt, std::istream& in) : opt_(opt), in_(in) {}

  const Options& options() const { return opt_; }

  const json& payload() {
    if (!payload_) {
      std::string text = opt_.json_text;
      if (text.empty()) text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
      payload_ = json::parse(text);
    }
    return *payload_;
  }

  BinaryForm form() {
    if (!opt_.f.empty()) {
      try {
        auto c = io::parse_rational_list(opt_.f);
        if (c.size() < 2) throw SchemaError("--f needs at least two coefficients");
        return BinaryForm(std::move(c));
      } catch (const DomainError& e) {
        throw SchemaError(std::string("--f: ") + e.what());
      }
    }
    return io::form_from_json(member(payload(), "f"), "f");
  }

  RatMatrix matrix(const std::string& key) { return io::matrix_from_json(member(payload(), key), key); }

 private:
  const Options& opt_;
  std::istream& in_;
  std::optional<json> payload_;
};

using Handler = std::function<json(Context&)>;

SymPair pair_of(Context& c) { return SymPair(c.matrix("A"), c.matrix("B")); }

json param_json(const OrbitParam& p) {
  return {{"g", io::poly_to_json(p.algebra()->modulus())}, {"alpha", io::to_json(p.alpha.coords())},
          {"t", io::to_json(p.t)}};
}

OrbitParam param_of(const AlgebraPtr& L, const json& j, const std::string& what) {
  return OrbitParam{io::element_from_json(L, member(j, "alpha"), what + ".alpha"),
                    io::rational_from_json(member(j, "t"), what + ".t")};
}

std::vector<Integer> primes_of(Context& c) {
  std::vector<Integer> out;
  if (!c.options().primes.empty()) {
    try {
      for (const auto& q : io::parse_rational_list(c.options().primes)) {
        if (q.get_den() != 1) throw SchemaError("--primes must list integers");
        out.push_back(q.get_num());
      }
    } catch (const DomainError& e) {
      throw SchemaError(std::string("--primes: ") + e.what());
    }
  } else if (c.payload().contains("primes")) {
    for (const auto& q : io::vector_from_json(c.payload()["primes"], "primes")) out.push_back(q.get_num());
  }
  return out;
}

json pair_json(const SymPair& v) { return {{"A", io::to_json(v.A)}, {"B", io::to_json(v.B)}}; }

Place place_of(const json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity")) return Place::infinity();
  const Rational p = io::rational_from_json(j, "place");
  if (p.get_den() != 1 || p < 2 || factor_integer(p.get_num()).size() != 1 || factor_integer(p.get_num())[0].second != 1) {
    throw DomainError("place must be a prime or \"inf\"");
  }
  return Place{p.get_num()};
}

json places_json(const std::vector<Place>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

SkewTriple triple_of(Context& c) { return SkewTriple(c.matrix("A"), c.matrix("B"), c.matrix("C")); }

OrientedIdeal ideal_of(const OrderPtr& R, Context& c) {
  const json& p = c.payload();
  if (!p.contains("ideal")) return if_ideal(R, 0);
  const json& I = p["ideal"];
  if (I.contains("k")) return if_ideal(R, member(I, "k").get<int>());
  std::vector<AlgElement> gens;
  const json& g = member(I, "generators");
  if (!g.is_array()) throw SchemaError("ideal.generators must be an array");
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto coords = io::vector_from_json(g[i], "ideal.generators");
    if (static_cast<int>(coords.size()) != R->degree()) throw SchemaError("ideal generator has the wrong length");
    gens.push_back(R->element(coords));
  }
  const int orientation = I.contains("orientation") ? I["orientation"].get<int>() : 1;
  return OrientedIdeal(R, gens, orientation);
}

json matrices_json(const std::vector<RatMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(io::to_json(m));
  return out;
}

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;

  // pencil -------------------------------------------------------------------
  h["pencil invariant"] = [](Context& c) {
    const BinaryForm f = invariant_binary_form(pair_of(c));
    json out{{"f", io::to_json(f)}, {"f0", io::to_json(f.leading())}, {"stable", is_stable(f)}};
    out["disc"] = f.leading() != 0 ? io::to_json(f.discriminant()) : json(nullptr);
    return out;
  };
  h["pencil to-param"] = [](Context& c) {
    const SymPair v = pair_of(c);
    json out = param_json(pencil_to_param(v));
    out["f"] = io::to_json(invariant_binary_form(v));
    return out;
  };
  h["pencil from-param"] = [](Context& c) {
    const BinaryForm f = c.form();
    return pair_json(param_to_pencil(f, param_of(algebra_of(f), c.payload(), "")));
  };
  h["pencil equiv"] = [](Context& c) {
    const BinaryForm f = c.form();
    const AlgebraPtr L = algebra_of(f);
    const OrbitParam p1 = param_of(L, member(c.payload(), "p1"), "p1"), p2 = param_of(L, member(c.payload(), "p2"), "p2");
    check_orbit_param(f, p1);
    check_orbit_param(f, p2);
    const auto w = g_equivalent(p1, p2);
    json out{{"equivalent", w.has_value()}};
    if (w) out["c"] = io::to_json(w->coords());
    return out;
  };
  h["pencil h-equiv"] = [](Context& c) {
    const BinaryForm f = c.form();
    const AlgebraPtr L = algebra_of(f);
    const OrbitParam p1 = param_of(L, member(c.payload(), "p1"), "p1"), p2 = param_of(L, member(c.payload(), "p2"), "p2");
    const auto w = h_equivalent(f, p1, p2, primes_of(c));
    json out{{"equivalent", w.has_value()}};
    if (w) {
      out["c"] = io::to_json(w->c.coords());
      out["d"] = io::to_json(w->d);
    }
    return out;
  };
  h["pencil stab"] = [](Context& c) {
    const SymPair v = pair_of(c);
    const StabilizerGroup G = stabilizer_rational(v);
    return json{{"order", io::to_json(G.order)},
                {"geometric_order", io::to_json(geometric_stabilizer_order(static_cast<int>(v.n())))},
                {"elements", matrices_json(G.elements)},
                {"generators", matrices_json(G.generators)}};
  };
  h["pencil real-obstruction"] = [](Context& c) {
    const BinaryForm f = c.form();
    return json{{"obstructed", real_orbit_obstruction(f)}, {"f0_class", io::to_json(squarefree_part(f.leading()))}};
  };
  h["pencil search"] = [](Context& c) {
    const ObstructionReport r = orbit_witness_search(c.form(), c.options().bound);
    json out{{"found", r.witness.has_value()}, {"real_obstruction", r.real_obstruction}};
    if (r.witness) out.update(param_json(*r.witness));
    return out;
  };

  // integral -----------------------------------------------------------------
  h["integral order"] = [](Context& c) {
    const OrderPtr R = rf_structure(c.form());
    json zeta = json::array();
    for (int k = 0; k < R->degree(); ++k) zeta.push_back(io::to_json(R->zeta(k).coords()));
    json table = json::array();
    for (const auto& row : R->structure_constants()) {
      json r = json::array();
      for (const auto& cell : row) {
        json v = json::array();
        for (const auto& z : cell) v.push_back(io::to_json(z));
        r.push_back(v);
      }
      table.push_back(r);
    }
    return json{{"f", io::to_json(R->form())}, {"g", io::poly_to_json(R->algebra()->modulus())},
                {"zeta", zeta}, {"structure_constants", table}, {"disc", io::to_json(order_disc(*R))}};
  };
  h["integral disc"] = [](Context& c) {
    const BinaryForm f = c.form();
    const Integer d = order_disc(*rf_structure(f));
    return json{{"disc", io::to_json(d)}, {"delta", io::to_json(f.discriminant())},
                {"equal", Rational(d) == f.discriminant()}};
  };
  h["integral ideal"] = [](Context& c) {
    const OrderPtr R = rf_structure(c.form());
    const int k = c.options().k >= 0 ? c.options().k : member(c.payload(), "k").get<int>();
    const OrientedIdeal I = if_ideal(R, k);
    json hnf_rows = json::array();
    for (const auto& row : I.lattice().basis()) {
      json r = json::array();
      for (const auto& z : row) r.push_back(io::to_json(z));
      hnf_rows.push_back(r);
    }
    return json{{"k", k},
                {"denominator", io::to_json(I.denominator())},
                {"hnf", hnf_rows},
                {"orientation", I.orientation()},
                {"norm", io::to_json(I.norm())},
                {"equals_power_of_I1", ideal_power(if_ideal(R, 1), k) == I}};
  };
  h["integral wood"] = [](Context& c) {
    const OrderPtr R = rf_structure(c.form());
    const OrientedIdeal I = ideal_of(R, c);
    const AlgElement alpha = c.payload().contains("alpha")
                                 ? io::element_from_json(R->algebra(), c.payload()["alpha"], "alpha")
                                 : R->algebra()->one();
    const SymPair v = wood_pair_to_matrices(I, alpha);
    const OrbitParam p = integral_to_rational_params(I, alpha);
    json out = pair_json(v);
    out["gamma"] = io::to_json(p.alpha.coords());
    out["t"] = io::to_json(p.t);
    return out;
  };
  h["integral canonical"] = [](Context& c) {
    const BinaryForm f = c.form();
    json out = pair_json(canonical_odd_orbit(f));
    const OrderPtr R = rf_structure(f);
    const OrbitParam p = integral_to_rational_params(ideal_power(if_ideal(R, 1), (f.degree() - 3) / 2),
                                                     R->algebra()->one());
    out["gamma"] = io::to_json(p.alpha.coords());
    out["t"] = io::to_json(p.t);
    return out;
  };
  h["integral different"] = [](Context& c) {
    const DifferentReport r = inverse_different_check(c.form());
    return json{{"containment", r.containment},
                {"index", io::to_json(r.index)},
                {"norm", io::to_json(r.norm)},
                {"pairing_matches", r.pairing_matches}};
  };

  // hyperelliptic ------------------------------------------------------------
  h["hyper"] = [](Context& c) {
    const BinaryForm f = c.form();
    std::vector<Rational> pt;
    if (!c.options().point.empty()) {
      try {
        pt = io::parse_rational_list(c.options().point);
      } catch (const DomainError& e) {
        throw SchemaError(std::string("--point: ") + e.what());
      }
    } else {
      pt = io::vector_from_json(member(c.payload(), "point"), "point");
    }
    if (pt.size() != 2) throw SchemaError("point must be u,v");
    return param_json(point_to_orbit(f, {pt[0], pt[1]}));
  };

  // quadratic spaces ---------------------------------------------------------
  h["quad iso"] = [](Context& c) {
    const QuadForm q(c.matrix("gram"));
    const bool iso = is_isotropic(q);
    json local = json::object();
    for (const auto& v : relevant_places(q)) local[v.str()] = is_locally_isotropic(q, v);
    json out{{"isotropic", iso}, {"local", local}};
    const auto w = iso ? isotropic_vector(q, c.options().bound) : std::nullopt;
    out["witness"] = w ? io::to_json(*w) : json(nullptr);
    return out;
  };
  h["quad equiv"] = [](Context& c) {
    return json{{"equivalent", forms_equivalent(QuadForm(c.matrix("q1")), QuadForm(c.matrix("q2")))}};
  };
  h["quad hilbert"] = [](Context& c) {
    const json& p = c.payload();
    const Rational a = io::rational_from_json(member(p, "a"), "a"), b = io::rational_from_json(member(p, "b"), "b");
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol needs nonzero a and b");
    if (p.contains("place")) return json{{"symbol", hilbert_symbol(a, b, place_of(p["place"]))}};
    json symbols = json::object();
    for (const auto& v : relevant_places(QuadForm::diagonal({a, b}))) symbols[v.str()] = hilbert_symbol(a, b, v);
    return json{{"symbols", symbols}};
  };
  h["quad spin"] = [](Context& c) {
    return json{{"ramified", places_json(spin_obstruction(QuadForm(c.matrix("gram"))).ramified)}};
  };
  h["quad gram"] = [](Context& c) {
    const QuadForm f = gram_invariant(QuadForm(c.matrix("space")), c.matrix("vectors"));
    return json{{"f", io::to_json(f.gram())}, {"stable", f.det() != 0}};
  };
  h["quad lift"] = [](Context& c) {
    const OrbitTarget t = so_orbit_target(QuadForm(c.matrix("f")), QuadForm(c.matrix("space")));
    return json{{"target", io::to_json(t.target.gram())}, {"lifts", t.lifts}};
  };

  // Pfaffians ----------------------------------------------------------------
  h["pf pfaffian"] = [](Context& c) { return json{{"pfaffian", io::to_json(pfaffian(c.matrix("M")))}}; };
  h["pf sub"] = [](Context& c) {
    json qs = json::array();
    for (const auto& q : sub_pfaffian_forms(triple_of(c))) qs.push_back(io::to_json(std::vector<Rational>(q.begin(), q.end())));
    return json{{"monomials", {"x^2", "y^2", "z^2", "xy", "xz", "yz"}}, {"Q", qs}};
  };
  h["pf pi"] = [](Context& c) { return json{{"pi", io::to_json(pi_invariant(triple_of(c)))}}; };
  h["pf stable"] = [](Context& c) {
    const RatMatrix pi = pi_invariant(triple_of(c));
    return json{{"stable", determinant(pi) != 0}, {"det_pi", io::to_json(determinant(pi))}};
  };

  // adjoint ------------------------------------------------------------------
  h["adj inv"] = [](Context& c) {
    const AdjointInvariants inv = adjoint_invariants(c.matrix("T"));
    return json{{"c", io::to_json(inv.c)}, {"moments", io::to_json(inv.moments)}, {"D", io::to_json(regularity_D(inv))}};
  };
  h["adj canon"] = [](Context& c) {
    const json& p = c.payload();
    AdjointInvariants inv;
    if (p.contains("T")) {
      inv = adjoint_invariants(c.matrix("T"));
    } else {
      inv.c = io::vector_from_json(member(p, "c"), "c");
      inv.moments = io::vector_from_json(member(p, "moments"), "moments");
      if (inv.c.empty() || inv.moments.size() + 1 != inv.c.size()) throw SchemaError("need n values of c and n-1 moments");
    }
    return json{{"T", io::to_json(adjoint_canonical_rep(inv))}};
  };
  h["adj conj"] = [](Context& c) {
    const RatMatrix T = c.matrix("T");
    const RatMatrix Tp = c.payload().contains("T_prime") ? c.matrix("T_prime") : adjoint_canonical_rep(adjoint_invariants(T));
    const Conjugator g = adjoint_conjugator(T, Tp);
    return json{{"g", io::to_json(g.g)}, {"unique", g.unique}, {"T_prime", io::to_json(Tp)}};
  };
  return h;
}

const std::map<std::string, std::string> kHelp{
    {"pencil", "pencils (A, B) of symmetric matrices and their orbit parameters"},
    {"pencil invariant", "invariant binary form f = disc(xA - yB); input {A, B}"},
    {"pencil to-param", "orbit parameters (alpha, t) of a stable pencil; input {A, B}"},
    {"pencil from-param", "pencil with given parameters; input {f, alpha, t}"},
    {"pencil equiv", "rational equivalence of two parameter pairs; input {f, p1, p2}"},
    {"pencil h-equiv", "equivalence up to scalars supported on --primes; input {f, p1, p2}"},
    {"pencil stab", "rational stabilizer of a stable pencil; input {A, B}"},
    {"pencil real-obstruction", "real obstruction to orbits with invariant --f"},
    {"pencil search", "bounded search for orbit parameters of --f up to height --bound"},
    {"integral", "the order R_f, its ideals I_f(k) and integral orbits"},
    {"integral order", "basis and structure constants of R_f for --f"},
    {"integral disc", "discriminant of R_f against disc(f)"},
    {"integral ideal", "HNF and norm of I_f(--k)"},
    {"integral wood", "integral pencil from {f, ideal: {k} or {generators, orientation}, alpha}"},
    {"integral canonical", "canonical integral orbit for odd-degree --f"},
    {"integral different", "inverse different of R_f against (1/f'(theta)) I_f(n-2)"},
    {"hyper", "orbit parameters of the point --point u,v on z^2 = f(x, y)"},
    {"quad", "rational quadratic spaces given by Gram matrices (q(x) = x^T G x)"},
    {"quad iso", "isotropy decision and bounded witness; input {gram}"},
    {"quad equiv", "rational equivalence; input {q1, q2}"},
    {"quad hilbert", "Hilbert symbol; input {a, b, place (prime or \"inf\", optional)}"},
    {"quad spin", "ramified places of the spin lifting obstruction; input {gram}"},
    {"quad gram", "Gram invariant of vectors in a space; input {space, vectors}"},
    {"quad lift", "orbit target and lifting test; input {f, space}"},
    {"pf", "Pfaffians and triples of 5x5 skew-symmetric matrices"},
    {"pf pfaffian", "Pfaffian of a skew-symmetric matrix; input {M}"},
    {"pf sub", "the five sub-Pfaffian ternary quadrics; input {A, B, C}"},
    {"pf pi", "the 3x3 invariant pi; input {A, B, C}"},
    {"pf stable", "stability test det(pi) != 0; input {A, B, C}"},
    {"adj", "conjugation of n x n matrices by the embedded GL_{n-1}"},
    {"adj inv", "invariants c, moments and D of T; input {T}"},
    {"adj canon", "canonical representative; input {T} or {c, moments}"},
    {"adj conj", "conjugator g with g T g^-1 = T'; input {T, T_prime (optional)}"},
};

const char* kFormHelp =
    "binary form coefficients f0,...,fn for f(x,y) = f0 x^n + f1 x^(n-1) y + ... + fn y^n";

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"aitk: exact rational orbit computations for pencils, orders, quadratic spaces and Pfaffians.\n"
               "Rationals are written as strings \"p/q\". Binary forms are given by their\n"
               "coefficients f0,...,fn, f0 being the coefficient of x^n. JSON input is read\n"
               "from --json or standard input.",
               "aitk"};
  app.require_subcommand(1);
  Options opt;
  const auto table = handlers();
  std::string chosen;
  bool selftest = false;

  auto add_common = [&](CLI::App* leaf, const std::string& key) {
    leaf->add_option("--json", opt.json_text, "JSON payload (default: read standard input)");
    leaf->add_option("--f", opt.f, kFormHelp);
    leaf->add_option("--bound", opt.bound, "height bound for searches")->capture_default_str();
    leaf->add_option("--point", opt.point, "curve point u,v");
    leaf->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    leaf->add_option("--primes", opt.primes, "extra primes, comma separated");
    leaf->add_option("--k", opt.k, "ideal index k for I_f(k)");
    leaf->callback([&chosen, key] { chosen = key; });
  };

  std::map<std::string, CLI::App*> groups;
  for (const auto& [key, _] : table) {
    const auto space = key.find(' ');
    if (space == std::string::npos) {
      add_common(app.add_subcommand(key, kHelp.at(key)), key);
      continue;
    }
    const std::string group = key.substr(0, space), leaf = key.substr(space + 1);
    if (!groups.count(group)) {
      groups[group] = app.add_subcommand(group, kHelp.at(group));
      groups[group]->require_subcommand(1);
    }
    add_common(groups[group]->add_subcommand(leaf, kHelp.at(key)), key);
  }
  CLI::App* st = app.add_subcommand("selftest", "run the acceptance criteria and print a pass/fail table");
  st->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  st->callback([&selftest] { selftest = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  if (selftest) {
    const auto results = acceptance::run_all(opt.seed);
    bool all = true;
    for (const auto& r : results) {
      out << acceptance::format_line(r) << "\n";
      all = all && r.passed;
    }
    return all ? 0 : 2;
  }

  try {
    Context ctx(opt, in);
    out << table.at(chosen)(ctx).dump() << "\n";
    return 0;
  } catch (const json::exception& e) {
    err << json{{"error", std::string("malformed JSON: ") + e.what()}}.dump() << "\n";
    return 1;
  } catch (const SchemaError& e) {
    err << json{{"error", std::string("malformed input: ") + e.what()}}.dump() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
}

}  // namespace ait::cli
