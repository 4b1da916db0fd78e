// poset-forge: command-line front end.  Exit status 0 on success, 1 on a
// domain error (one line on stderr), 2 on a usage error.

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetforge/chain_complex.hpp"
#include "posetforge/cocycles.hpp"
#include "posetforge/deformation.hpp"
#include "posetforge/diag.hpp"
#include "posetforge/error.hpp"
#include "posetforge/groth.hpp"
#include "posetforge/io.hpp"
#include "posetforge/poset.hpp"
#include "posetforge/thin.hpp"

using namespace pf;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Options {
  bool json = false;
  std::string field;
  std::string file, file2, poset, cochain, element;
  int degree = 1;
  int max_degree = -1;
};

Field field_of(const Options& o) { return Field::parse(o.field); }

std::string rel_token(const Poset& p, Index x, Index y) { return p.label(x) + "<" + p.label(y); }

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ----- shared formatting

std::vector<std::string> labels_of(const Poset& p, const std::vector<Index>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(p.label(x));
  return out;
}

std::string subposet_text(const ClosedSubposet& s) {
  const Poset& p = s.parent();
  std::vector<std::string> rel;
  for (const auto& [x, y] : s.strict_pairs()) rel.push_back(rel_token(p, x, y));
  std::string out = "{" + join(labels_of(p, s.members()), " ");
  if (!rel.empty()) out += "; " + join(rel, " ");
  return out + "}";
}

Json subposet_json(const ClosedSubposet& s) {
  const Poset& p = s.parent();
  Json rel = Json::array();
  for (const auto& [x, y] : s.strict_pairs()) rel.push_back({p.label(x), p.label(y)});
  return {{"members", labels_of(p, s.members())}, {"rel", rel}};
}

std::string rep_text(const ThinRep& m) {
  const Poset& p = m.parent();
  std::ostringstream out;
  out << "support: " << join(labels_of(p, m.support().members())) << "\n";
  std::vector<std::string> rel;
  for (const auto& [x, y] : m.support().strict_pairs()) rel.push_back(rel_token(p, x, y));
  if (!rel.empty()) out << "rel: " << join(rel) << "\n";
  for (const auto& [xy, v] : m.alpha_values())
    out << "alpha: " << p.label(xy.first) << " " << p.label(xy.second) << " " << m.field().format(v) << "\n";
  return out.str();
}

Json rep_json(const ThinRep& m) {
  const Poset& p = m.parent();
  Json j = subposet_json(m.support());
  Json alpha = Json::array();
  for (const auto& [xy, v] : m.alpha_values()) alpha.push_back({p.label(xy.first), p.label(xy.second), m.field().format(v)});
  j["alpha"] = alpha;
  j["dimension_vector"] = m.dimension_vector();
  return j;
}

std::string chain_text(const Poset& p, const Chain& c) {
  std::vector<std::string> v;
  for (auto x : c) v.push_back(p.label(x));
  return join(v);
}

void cochain_text(std::ostream& out, const MultCochain& c) {
  for (const auto& [ch, v] : c.values()) out << chain_text(c.poset(), ch) << " : " << c.field().format(v) << "\n";
}

Json cochain_json(const MultCochain& c) {
  Json j = Json::array();
  for (const auto& [ch, v] : c.values()) {
    std::vector<std::string> names;
    for (auto x : ch) names.push_back(c.poset().label(x));
    j.push_back({{"chain", names}, {"value", c.field().format(v)}});
  }
  return j;
}

std::string aligned_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& h : head) w = std::max(w, h.size());
  for (const auto& r : rows)
    for (const auto& c : r) w = std::max(w, c.size());
  std::ostringstream out;
  out << std::setw(static_cast<int>(w)) << "" << " |";
  for (const auto& h : head) out << " " << std::setw(static_cast<int>(w)) << h;
  out << "\n" << std::string(w + 2 + head.size() * (w + 1), '-') << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << std::setw(static_cast<int>(w)) << head[i] << " |";
    for (const auto& c : rows[i]) out << " " << std::setw(static_cast<int>(w)) << c;
    out << "\n";
  }
  return out.str();
}

// ----- poset

void poset_info(const Options& o) {
  const auto p = load_poset(o.file);
  const auto covers = hasse_covers(*p);
  const auto k = order_complex(*p);
  std::vector<std::size_t> fvec;
  for (int n = 0; n <= k.top_degree(); ++n) fvec.push_back(k.count(n));
  std::optional<std::size_t> autos;
  try {
    autos = automorphism_group(*p).size();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  if (o.json) {
    Json cv = Json::array();
    for (const auto& [x, y] : covers) cv.push_back({p->label(x), p->label(y)});
    Json j{{"elements", p->labels()}, {"covers", cv}, {"connected", is_connected(*p)}, {"f_vector", fvec}};
    j["automorphisms"] = autos ? Json(*autos) : Json(nullptr);
    emit(j);
    return;
  }
  std::vector<std::string> cv;
  for (const auto& [x, y] : covers) cv.push_back(rel_token(*p, x, y));
  std::cout << "elements: " << join(p->labels()) << "\n";
  std::cout << "covers: " << join(cv) << "\n";
  std::cout << "connected: " << (is_connected(*p) ? "yes" : "no") << "\n";
  std::vector<std::string> fs;
  for (auto c : fvec) fs.push_back(std::to_string(c));
  std::cout << "simplices by dimension: " << join(fs) << "\n";
  std::cout << "automorphisms: " << (autos ? std::to_string(*autos) : "too many elements to enumerate") << "\n";
}

void poset_homology(const Options& o) {
  const auto p = load_poset(o.file);
  const auto k = order_complex(*p);
  const int top = o.max_degree >= 0 ? std::min(o.max_degree, k.top_degree()) : k.top_degree();
  Json arr = Json::array();
  for (int n = 0; n <= top; ++n) {
    const auto h = homology(k, n);
    if (o.json) {
      std::vector<std::string> tors;
      for (const auto& d : h.torsion) tors.push_back(d.get_str());
      arr.push_back({{"degree", n}, {"group", h.to_string()}, {"free_rank", h.free_rank}, {"torsion", tors}});
    } else {
      std::cout << "H_" << n << " = " << h.to_string() << "\n";
    }
  }
  if (o.json) emit({{"homology", arr}});
}

void poset_cohomology(const Options& o) {
  const auto p = load_poset(o.file);
  const Field f = field_of(o);
  if (o.cochain.empty()) {
    const auto e = cohomology_structure(*p, o.degree, f);
    const auto ord = e.order();
    if (o.json) {
      emit({{"degree", o.degree},
            {"field", f.name()},
            {"group", e.to_string()},
            {"order", ord ? Json(ord->get_str()) : Json("infinite")}});
    } else {
      std::cout << "H^" << o.degree << " = " << e.to_string() << "\n";
      std::cout << "order: " << (ord ? ord->get_str() : "infinite") << "\n";
    }
    return;
  }
  const auto c = parse_cochain(read_file(o.cochain), p, f);
  const auto r = reduce_modulo_coboundaries(c);
  if (o.json) {
    std::vector<std::string> coords, moduli;
    for (const auto& x : r.class_coordinates) coords.push_back(x.get_str());
    for (const auto& x : r.class_moduli) moduli.push_back(x.get_str());
    Json j{{"degree", c.degree()}, {"trivial", r.trivial}, {"class_coordinates", coords}, {"class_moduli", moduli}};
    j["witness"] = r.witness ? cochain_json(*r.witness) : Json(nullptr);
    j["representative"] = cochain_json(r.representative);
    emit(j);
    return;
  }
  std::cout << "cocycle of degree " << c.degree() << ": " << (r.trivial ? "trivial" : "nontrivial") << "\n";
  if (r.trivial && r.witness) {
    std::cout << "witness a with delta(a) = c:\n";
    cochain_text(std::cout, *r.witness);
  } else if (!r.trivial) {
    std::vector<std::string> coords;
    for (std::size_t i = 0; i < r.class_coordinates.size(); ++i)
      coords.push_back(r.class_coordinates[i].get_str() + " mod " +
                       (r.class_moduli[i] == 0 ? std::string("0") : r.class_moduli[i].get_str()));
    std::cout << "class coordinates: " << join(coords, ", ") << "\n";
    std::cout << "canonical representative:\n";
    cochain_text(std::cout, r.representative);
  }
}

void poset_semigroup(const Options& o) {
  const auto p = load_poset(o.file);
  const auto t = undeformed_semigroup(p);
  const std::size_t n = t.elements.size();
  if (o.json) {
    Json els = Json::array();
    for (const auto& e : t.elements) els.push_back(subposet_json(e));
    std::vector<std::vector<std::size_t>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i].assign(t.product.begin() + static_cast<long>(i * n),
                                                       t.product.begin() + static_cast<long>((i + 1) * n));
    emit({{"elements", els}, {"identity", t.identity}, {"table", rows}});
    return;
  }
  std::vector<std::string> head;
  for (std::size_t i = 0; i < n; ++i) {
    head.push_back("S" + std::to_string(i));
    std::cout << head.back() << " = " << subposet_text(t.elements[i]) << "\n";
  }
  std::cout << "identity: S" << t.identity << "\n";
  std::vector<std::vector<std::string>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back("S" + std::to_string(t.product[i * n + j]));
  std::cout << aligned_table(head, rows);
}

// ----- deform

PosetPtr poset_for_cochain(const Options& o, const std::string& cochain_path) {
  if (!o.poset.empty()) return load_poset(o.poset);
  const auto ref = poset_reference(read_file(cochain_path));
  if (!ref) throw Error(ErrorCode::ParseError, cochain_path + ": no 'poset:' line and no --poset given");
  return load_poset(fs::path(cochain_path).parent_path() / *ref);
}

std::string term(const Field& f, const Scalar& c, const std::string& label) {
  return c == 1 ? label : f.format(c) + " " + label;
}

Json table_json(const StructureConstantAlgebra& a) {
  const Field& f = a.field;
  const std::size_t n = a.dimension();
  Json table = Json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Json terms = Json::array();
      const auto& v = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0) terms.push_back({a.basis[k], f.format(v[k])});
      if (!terms.empty()) table[a.basis[i] + "," + a.basis[j]] = terms;
    }
  std::vector<std::string> idem;
  for (auto i : a.idempotents) idem.push_back(a.basis[i]);
  return {{"field", f.name()}, {"basis", a.basis}, {"idempotents", idem}, {"table", table}};
}

void deform_build(const Options& o) {
  const auto p = load_poset(o.file);
  const Field f = field_of(o);
  const auto a = build_deformed(p, parse_cochain(read_file(o.cochain), p, f), f);
  if (o.json) {
    emit(table_json(to_structure_constants(a)));
    return;
  }
  std::vector<std::string> basis, unit;
  for (std::size_t i = 0; i < a.dimension(); ++i) basis.push_back(a.basis_label(i));
  for (const auto& [i, c] : a.unit()) unit.push_back(term(f, c, a.basis_label(i)));
  std::cout << "dimension: " << a.dimension() << "\n";
  std::cout << "basis: " << join(basis) << "\n";
  std::cout << "unit: " << join(unit, " + ") << "\n";
  std::cout << "products:\n";
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      if (auto pr = a.product(i, j))
        std::cout << "  " << a.basis_label(i) << " * " << a.basis_label(j) << " = "
                  << term(f, pr->second, a.basis_label(pr->first)) << "\n";
}

void deform_trivial(const Options& o) {
  const auto p = load_poset(o.file);
  const Field f = field_of(o);
  const auto a = build_deformed(p, parse_cochain(read_file(o.cochain), p, f), f);
  const auto t = is_trivial_deformation(a);
  if (o.json) {
    emit({{"trivial", t.trivial}, {"rescaling", t.rescaling ? cochain_json(*t.rescaling) : Json(nullptr)}});
    return;
  }
  std::cout << "trivial: " << (t.trivial ? "yes" : "no") << "\n";
  if (t.rescaling) {
    std::cout << "rescaling r with (r f)(r f) = r f:\n";
    cochain_text(std::cout, *t.rescaling);
  }
}

void deform_iso(const Options& o) {
  const Field f = field_of(o);
  const auto pa = poset_for_cochain(o, o.file), pb = poset_for_cochain(o, o.file2);
  const auto a = build_deformed(pa, parse_cochain(read_file(o.file), pa, f), f);
  const auto b = build_deformed(pb, parse_cochain(read_file(o.file2), pb, f), f);
  if (!(*pa == *pb)) throw Error(ErrorCode::MismatchedParent, "the cocycles live on different posets");
  const auto iso = deformations_isomorphic(a, b);
  if (o.json) {
    Json j{{"isomorphic", iso.has_value()}};
    if (iso) {
      Json sigma = Json::object();
      for (std::size_t x = 0; x < iso->sigma.size(); ++x)
        sigma[pa->label(static_cast<Index>(x))] = pa->label(iso->sigma[x]);
      j["sigma"] = sigma;
      j["alpha"] = cochain_json(iso->alpha);
    }
    emit(j);
    return;
  }
  std::cout << "isomorphic: " << (iso ? "yes" : "no") << "\n";
  if (!iso) return;
  std::vector<std::string> sigma;
  for (std::size_t x = 0; x < iso->sigma.size(); ++x)
    sigma.push_back(pa->label(static_cast<Index>(x)) + "->" + pa->label(iso->sigma[x]));
  std::cout << "sigma: " << join(sigma) << "\n";
  std::cout << "alpha with pullback(lambda_A, sigma) / lambda_B = delta(alpha):\n";
  cochain_text(std::cout, iso->alpha);
}

StructureConstantAlgebra read_table(const std::string& path, const Field& f) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  StructureConstantAlgebra a{f, {}, {}, {}};
  try {
    a.basis = j.at("basis").get<std::vector<std::string>>();
    const std::size_t n = a.basis.size();
    auto index = [&](const Json& v) -> std::size_t {
      if (v.is_number_integer()) {
        const auto i = v.get<long>();
        if (i < 0 || static_cast<std::size_t>(i) >= n) throw Error(ErrorCode::ParseError, "basis index out of range");
        return static_cast<std::size_t>(i);
      }
      const auto s = v.get<std::string>();
      const auto it = std::find(a.basis.begin(), a.basis.end(), s);
      if (it != a.basis.end()) return static_cast<std::size_t>(it - a.basis.begin());
      throw Error(ErrorCode::ParseError, "unknown basis element '" + s + "'");
    };
    auto index_text = [&](const std::string& s) {
      const bool digits = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
      return digits && std::find(a.basis.begin(), a.basis.end(), s) == a.basis.end() ? index(Json(std::stol(s)))
                                                                                     : index(Json(s));
    };
    for (const auto& v : j.at("idempotents")) a.idempotents.push_back(index(v));
    a.table.assign(n * n, std::vector<Scalar>(n, Scalar(0)));
    for (const auto& [key, terms] : j.at("table").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "table key '" + key + "' is not 'i,j'");
      const std::size_t i = index_text(key.substr(0, comma)), k = index_text(key.substr(comma + 1));
      for (const auto& t : terms) {
        const std::size_t r = index(t.at(0));
        const Json& c = t.at(1);
        const Scalar v = c.is_string() ? f.parse_element(c.get<std::string>()) : f.from_integer(c.get<long>());
        a.table[i * n + k][r] = f.add(a.table[i * n + k][r], v);
      }
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  a.validate();
  return a;
}

void deform_recognize(const Options& o) {
  const Field f = field_of(o);
  const auto r = recognize_incidence(read_table(o.file, f));
  if (!r.recognized) {
    if (o.json) emit({{"recognized", false}, {"reason", r.reason}});
    else std::cout << "incidence algebra: no (" << r.reason << ")\n";
    return;
  }
  const auto& g = *r.recognized;
  std::vector<std::string> rel;
  for (const auto& [x, y] : g.order.pairs())
    if (x != y) rel.push_back(g.order.label(x) + "<=" + g.order.label(y));
  if (o.json) {
    Json j{{"recognized", true}, {"is_poset", g.is_poset}, {"elements", g.order.labels()}, {"relations", rel}};
    if (g.lambda) j["lambda"] = cochain_json(*g.lambda);
    emit(j);
    return;
  }
  std::cout << "incidence algebra: yes\n";
  std::cout << "elements: " << join(g.order.labels()) << "\n";
  std::cout << "relations: " << join(rel) << "\n";
  std::cout << "antisymmetric: " << (g.is_poset ? "yes" : "no") << "\n";
  if (g.lambda) {
    std::cout << "lambda:\n";
    cochain_text(std::cout, *g.lambda);
  }
}

// ----- thin

void thin_classify(const Options& o) {
  const auto p = load_poset(o.file);
  const auto cat = classify_thin(p, field_of(o));
  if (o.json) {
    Json arr = Json::array();
    for (const auto& e : cat.entries) arr.push_back(rep_json(e.rep));
    emit({{"classes", cat.entries.size()}, {"representatives", arr}});
    return;
  }
  std::cout << "classes: " << cat.entries.size() << "\n";
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    const auto& m = cat.entries[i].rep;
    std::string alpha;
    for (const auto& [xy, v] : m.alpha_values())
      if (v != 1) alpha += " " + rel_token(*p, xy.first, xy.second) + ":" + m.field().format(v);
    std::cout << "[" << i + 1 << "] " << subposet_text(m.support()) << (alpha.empty() ? "" : " alpha" + alpha) << "\n";
  }
}

void thin_iso(const Options& o) {
  const Field f = field_of(o);
  const auto m = load_rep(o.file, f), n = load_rep(o.file2, f);
  const auto theta = reps_isomorphic(m, n);
  if (o.json) {
    Json j{{"isomorphic", theta.has_value()}};
    if (theta) {
      Json t = Json::object();
      for (auto x : m.support().members()) t[m.parent().label(x)] = f.format((*theta)[static_cast<std::size_t>(x)]);
      j["theta"] = t;
    }
    emit(j);
    return;
  }
  std::cout << "isomorphic: " << (theta ? "yes" : "no") << "\n";
  if (theta) {
    std::vector<std::string> t;
    for (auto x : m.support().members())
      t.push_back(m.parent().label(x) + "=" + f.format((*theta)[static_cast<std::size_t>(x)]));
    std::cout << "theta (m_x -> theta_x n_x): " << join(t) << "\n";
  }
}

void thin_tensor(const Options& o) {
  const Field f = field_of(o);
  const auto t = tensor(load_rep(o.file, f), load_rep(o.file2, f));
  if (o.json) emit(rep_json(t));
  else std::cout << rep_text(t);
}

void thin_access(const Options& o) {
  const Field f = field_of(o);
  const auto steps = accessibility_chain(load_rep(o.file, f));
  const Poset& p = steps.front().rep.parent();
  auto kind = [](AccessStep::Kind k) {
    switch (k) {
      case AccessStep::Kind::Start: return "start";
      case AccessStep::Kind::Submodule: return "submodule";
      case AccessStep::Kind::Quotient: return "quotient";
    }
    return "";
  };
  if (o.json) {
    Json arr = Json::array();
    for (const auto& s : steps) {
      Json j{{"kind", kind(s.kind)}, {"dimension", s.rep.dimension()}};
      j["removed"] = s.removed >= 0 ? Json(p.label(s.removed)) : Json(nullptr);
      j["support"] = subposet_json(s.rep.support());
      arr.push_back(j);
    }
    emit({{"length", steps.size()}, {"steps", arr}});
    return;
  }
  for (const auto& s : steps) {
    std::cout << s.rep.dimension() << " " << kind(s.kind);
    if (s.removed >= 0) std::cout << " (removed " << p.label(s.removed) << ")";
    std::cout << ": " << subposet_text(s.rep.support()) << "\n";
  }
}

void thin_sublattice(const Options& o) {
  const auto p = load_poset(o.file);
  const Index x = p->index_of(o.element);
  const auto l = submodule_lattice(p, x);
  const std::size_t n = l.elements.size();
  if (o.json) {
    Json els = Json::array();
    for (const auto& e : l.elements) els.push_back(labels_of(*p, e));
    Json covers = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (l.elements[j].size() == l.elements[i].size() + 1 && l.leq[i * n + j]) covers.push_back({i, j});
    emit({{"top", p->label(x)}, {"submodules", els}, {"covers", covers}, {"distributive", l.distributive}});
    return;
  }
  std::cout << "submodules of P(" << p->label(x) << "): " << n << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> up;
    for (std::size_t j = 0; j < n; ++j)
      if (l.elements[j].size() == l.elements[i].size() + 1 && l.leq[i * n + j]) up.push_back("[" + std::to_string(j) + "]");
    std::cout << "[" << i << "] {" << join(labels_of(*p, l.elements[i])) << "}";
    if (!up.empty()) std::cout << " < " << join(up);
    std::cout << "\n";
  }
  std::cout << "distributive: " << (l.distributive ? "yes" : "no") << "\n";
}

// ----- matrix

std::vector<std::vector<std::string>> matrix_cells(const PatternMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i].push_back(m.field.format(m(i, j)));
  return rows;
}

void print_matrix(const PatternMatrix& m) {
  std::size_t w = 1;
  const auto cells = matrix_cells(m);
  for (const auto& r : cells)
    for (const auto& c : r) w = std::max(w, c.size());
  for (const auto& r : cells) {
    std::cout << " ";
    for (const auto& c : r) std::cout << " " << std::setw(static_cast<int>(w)) << c;
    std::cout << "\n";
  }
}

Json arrows_json(const std::vector<IndexPair>& arrows) {
  Json j = Json::array();
  for (const auto& [i, k] : arrows) j.push_back({i + 1, k + 1});
  return j;
}

std::string arrows_text(const std::vector<IndexPair>& arrows) {
  std::vector<std::string> v;
  for (const auto& [i, k] : arrows) v.push_back("(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")");
  return v.empty() ? "none" : join(v);
}

void matrix_canon(const Options& o) {
  const Field f = field_of(o);
  const auto a = parse_matrix(read_file(o.file), f);
  const auto [c, d] = canonical_form(a);
  const auto s = spanning_structure(pattern_graph(a));
  std::vector<IndexPair> tree;
  for (const auto& t : s.trees) tree.insert(tree.end(), t.begin(), t.end());
  std::vector<std::string> ds, inv;
  for (const auto& x : d) ds.push_back(f.format(x));
  for (const auto& x : orbit_invariant(a).holonomy) inv.push_back(f.format(x));
  if (o.json) {
    emit({{"field", f.name()},
          {"C", matrix_cells(c)},
          {"D", ds},
          {"tree_arrows", arrows_json(tree)},
          {"eliminated", arrows_json(s.eliminated)},
          {"invariant", inv}});
    return;
  }
  std::cout << "C =\n";
  print_matrix(c);
  std::cout << "D = diag(" << join(ds, ", ") << ")\n";
  std::cout << "tree arrows: " << arrows_text(tree) << "\n";
  std::cout << "eliminated: " << arrows_text(s.eliminated) << "\n";
  std::cout << "invariant: " << (inv.empty() ? "()" : "(" + join(inv, ", ") + ")") << "\n";
}

void matrix_orbit(const Options& o) {
  const Field f = field_of(o);
  const auto inv = orbit_invariant(parse_matrix(read_file(o.file), f));
  std::vector<std::string> h;
  for (const auto& x : inv.holonomy) h.push_back(f.format(x));
  if (o.json) {
    emit({{"n", inv.graph.n}, {"arrows", arrows_json(inv.graph.arrows)}, {"invariant", h}});
    return;
  }
  std::cout << "arrows: " << arrows_text(inv.graph.arrows) << "\n";
  std::cout << "invariant: " << (h.empty() ? "()" : "(" + join(h, ", ") + ")") << "\n";
}

void matrix_conj(const Options& o) {
  const Field f = field_of(o);
  const auto d = diag_conjugate_test(parse_matrix(read_file(o.file), f), parse_matrix(read_file(o.file2), f));
  std::vector<std::string> ds;
  if (d)
    for (const auto& x : *d) ds.push_back(f.format(x));
  if (o.json) {
    Json j{{"conjugate", d.has_value()}};
    if (d) j["D"] = ds;
    emit(j);
    return;
  }
  std::cout << "conjugate: " << (d ? "yes" : "no") << "\n";
  if (d) std::cout << "D = diag(" << join(ds, ", ") << ") with D A D^-1 = B\n";
}

// ----- k0

void k0_table_cmd(const Options& o) {
  const auto p = load_poset(o.file);
  const auto check = is_meet_semilattice(*p);
  if (!check.is_meet_semilattice) {
    const auto [x, y] = *check.witness;
    std::string why = check.maximal_lower_bounds.empty()
                          ? "no lower bound"
                          : "maximal lower bounds " + join(labels_of(*p, check.maximal_lower_bounds), ", ");
    throw Error(ErrorCode::NotMeetSemilattice, p->label(x) + " and " + p->label(y) + " have " + why);
  }
  const auto t = k0_table(p);
  const std::size_t n = p->size();
  if (o.json) {
    std::vector<std::vector<std::string>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i].push_back(p->label(t.meet[i * n + j]));
    emit({{"elements", p->labels()}, {"meet", rows}});
    return;
  }
  std::vector<std::vector<std::string>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(p->label(t.meet[i * n + j]));
  std::cout << aligned_table(p->labels(), rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incidence algebras of finite posets: homology, cocycles, deformations, thin representations"};
  app.require_subcommand(1);
  Options o;
  std::function<void(const Options&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
    auto* c = parent->add_subcommand(name, help);
    c->add_flag("--json", o.json, "JSON output");
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto file = [](CLI::App* c, const std::string& name, std::string& dest, const std::string& help) {
    c->add_option(name, dest, help)->required()->check(CLI::ExistingFile);
  };
  auto need_field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "q (prime power), Q, C, closed:p, symbolic:p")->required();
  };

  auto* poset = app.add_subcommand("poset", "poset structure")->require_subcommand(1);
  {
    auto* c = leaf(poset, "info", "elements, covers, automorphisms", poset_info);
    file(c, "poset", o.file, "poset file");
    c = leaf(poset, "homology", "integral homology of the order complex", poset_homology);
    file(c, "poset", o.file, "poset file");
    c->add_option("--max-degree", o.max_degree, "last degree to report");
    c = leaf(poset, "cohomology", "H^n(Delta, K*), or the class of a cocycle", poset_cohomology);
    file(c, "poset", o.file, "poset file");
    c->add_option("--degree", o.degree, "degree n")->check(CLI::NonNegativeNumber);
    need_field(c);
    c->add_option("--cochain", o.cochain, "cochain file to reduce modulo coboundaries")->check(CLI::ExistingFile);
    c = leaf(poset, "semigroup", "closed subposets under the wedge", poset_semigroup);
    file(c, "poset", o.file, "poset file");
  }
  auto* deform = app.add_subcommand("deform", "deformed incidence algebras")->require_subcommand(1);
  {
    auto* c = leaf(deform, "build", "multiplication table of I_lambda", deform_build);
    file(c, "poset", o.file, "poset file");
    file(c, "cocycle", o.cochain, "2-cocycle file");
    need_field(c);
    c = leaf(deform, "trivial", "is I_lambda isomorphic to I(P) by a rescaling", deform_trivial);
    file(c, "poset", o.file, "poset file");
    file(c, "cocycle", o.cochain, "2-cocycle file");
    need_field(c);
    c = leaf(deform, "iso", "isomorphism of two deformations", deform_iso);
    file(c, "A", o.file, "2-cocycle file");
    file(c, "B", o.file2, "2-cocycle file");
    c->add_option("--poset", o.poset, "poset file (else the 'poset:' line of the cocycle files)")
        ->check(CLI::ExistingFile);
    need_field(c);
    c = leaf(deform, "recognize", "recognize a structure-constant table as a deformed incidence algebra",
             deform_recognize);
    file(c, "table", o.file, "multiplication-table JSON");
    need_field(c);
  }
  auto* thin = app.add_subcommand("thin", "thin representations")->require_subcommand(1);
  {
    auto* c = leaf(thin, "classify", "one representative per isomorphism class", thin_classify);
    file(c, "poset", o.file, "poset file");
    need_field(c);
    c = leaf(thin, "iso", "isomorphism of two thin representations", thin_iso);
    file(c, "rep1", o.file, "rep file");
    file(c, "rep2", o.file2, "rep file");
    need_field(c);
    c = leaf(thin, "tensor", "pointwise tensor product", thin_tensor);
    file(c, "rep1", o.file, "rep file");
    file(c, "rep2", o.file2, "rep file");
    need_field(c);
    c = leaf(thin, "access", "chain of indecomposable sub- and quotient modules", thin_access);
    file(c, "rep", o.file, "rep file");
    need_field(c);
    c = leaf(thin, "sublattice", "submodule lattice of the projective P(x)", thin_sublattice);
    file(c, "poset", o.file, "poset file");
    c->add_option("element", o.element, "element x")->required();
  }
  auto* matrix = app.add_subcommand("matrix", "diagonal conjugation of square matrices")->require_subcommand(1);
  {
    auto* c = leaf(matrix, "canon", "canonical form C = D A D^-1", matrix_canon);
    file(c, "matrix", o.file, "matrix file");
    need_field(c);
    c = leaf(matrix, "orbit", "pattern and holonomy invariant", matrix_orbit);
    file(c, "matrix", o.file, "matrix file");
    need_field(c);
    c = leaf(matrix, "conj", "diagonal D with D A D^-1 = B", matrix_conj);
    file(c, "A", o.file, "matrix file");
    file(c, "B", o.file2, "matrix file");
    need_field(c);
  }
  auto* k0 = app.add_subcommand("k0", "Grothendieck semigroup of a meet-semilattice")->require_subcommand(1);
  {
    auto* c = leaf(k0, "table", "table of meets", k0_table_cmd);
    file(c, "poset", o.file, "poset file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    action(o);
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
