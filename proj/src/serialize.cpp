#include "subdepth/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "subdepth/error.hpp"

namespace subdepth {

namespace {

Json index_sets(const std::vector<IndexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

std::vector<std::size_t> class_sizes_sorted(const PermutationGroup& g) {
  auto sizes = g.classes().class_sizes;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::InvalidInput, "malformed JSON: " + what); }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    malformed(std::string("bad field '") + key + "'");
  }
}

mpq_class parse_fraction(const std::string& s) {
  try {
    mpq_class q(s, 10);
    q.canonicalize();
    if (q.get_den() == 0) malformed("zero denominator");
    return q;
  } catch (const std::invalid_argument&) {
    malformed("bad fraction '" + s + "'");
  }
}

void pretty(const Json& j, int indent, std::string& out) {
  const auto scalar = [](const Json& x) { return !x.is_object() && !x.is_array(); };
  if (scalar(j) || j.empty()) {
    out += j.dump();
    return;
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), scalar)) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    pretty(*it, indent + 2, out);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(static_cast<std::size_t>(indent), ' ') + (object ? "}" : "]");
}

}  // namespace

std::string pretty_json(const Json& j) {
  std::string out;
  pretty(j, 0, out);
  return out;
}

Json to_json(const mpz_class& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  malformed("expected an integer");
}

Json to_json(const Cyclotomic& x) {
  if (auto q = x.rational()) return q->get_den() == 1 ? to_json(q->get_num()) : Json(q->get_str());
  Json j;
  j["conductor"] = x.conductor();
  j["denominator"] = to_json(x.denominator());
  const auto& num = x.numerators();
  const auto nonzero = static_cast<std::size_t>(std::count_if(num.begin(), num.end(), [](const mpz_class& v) { return v != 0; }));
  if (2 * nonzero < num.size()) {
    Json sparse = Json::array();
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (num[i] != 0) sparse.push_back(Json::array({i, to_json(num[i])}));
    }
    j["sparse"] = std::move(sparse);
  } else {
    Json dense = Json::array();
    for (const auto& v : num) dense.push_back(to_json(v));
    j["numerators"] = std::move(dense);
  }
  return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_string()) return Cyclotomic(parse_fraction(j.get<std::string>()));
  if (j.is_number_integer()) return Cyclotomic(mpz_from_json(j));
  const auto n = field<unsigned>(j, "conductor");
  if (n == 0 || n > 1000000) malformed("conductor out of range");
  const mpz_class den = mpz_from_json(j.at("denominator"));
  if (den <= 0) malformed("denominator must be positive");
  const unsigned phi = totient(n);
  std::vector<mpq_class> coeffs(phi, 0);
  if (j.contains("sparse")) {
    for (const auto& entry : j.at("sparse")) {
      if (!entry.is_array() || entry.size() != 2) malformed("sparse entry");
      const auto i = entry[0].get<std::size_t>();
      if (i >= phi) malformed("sparse index out of range");
      coeffs[i] = mpq_class(mpz_from_json(entry[1]), den);
    }
  } else {
    const auto& dense = j.at("numerators");
    if (!dense.is_array() || dense.size() != phi) malformed("numerator count");
    for (std::size_t i = 0; i < phi; ++i) coeffs[i] = mpq_class(mpz_from_json(dense[i]), den);
  }
  for (auto& c : coeffs) c.canonicalize();
  return Cyclotomic::from_basis(n, coeffs);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) malformed("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) malformed("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = mpz_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const Certificate& c) {
  return {{"lower_label", c.lower_label}, {"higher_label", c.higher_label}, {"lower", to_json(c.lower)},
          {"higher", to_json(c.higher)}};
}

Certificate certificate_from_json(const Json& j) {
  return {field<std::string>(j, "lower_label"), field<std::string>(j, "higher_label"), matrix_from_json(j.at("lower")),
          matrix_from_json(j.at("higher"))};
}

std::string fingerprint(const PermutationGroup& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& gen : g.generators()) {
    for (std::size_t i = 0; i < gen.degree(); ++i) mix(gen[i]);
    mix(0xffff);
  }
  std::ostringstream out;
  out << g.order() << "-" << g.degree() << "-";
  const auto sizes = class_sizes_sorted(g);
  std::uint64_t sh = 1469598103934665603ULL;
  for (auto s : sizes) {
    sh ^= s;
    sh *= 1099511628211ULL;
  }
  out << std::hex << sh << "-" << h;
  return out.str();
}

Json classes_json(const PermutationGroup& g) {
  const auto& cls = g.classes();
  Json list = Json::array();
  for (std::size_t k = 0; k < cls.size(); ++k) {
    list.push_back({{"representative", cls.representatives[k].to_cycle_string()},
                    {"size", cls.class_sizes[k]},
                    {"order", cls.element_orders[k]},
                    {"centralizer_order", cls.centralizer_order(k)}});
  }
  return {{"group", g.label()}, {"order", g.order()}, {"degree", g.degree()}, {"exponent", cls.exponent},
          {"classes", std::move(list)}};
}

Json to_json(const CharacterTable& table) {
  const auto& g = table.group;
  const auto& cls = g.classes();
  Json fp = {{"order", g.order()}, {"degree", g.degree()}, {"class_sizes", class_sizes_sorted(g)},
             {"key", fingerprint(g)}};
  Json reps = Json::array();
  for (const auto& rep : cls.representatives) reps.push_back(rep.to_cycle_string());
  Json chars = Json::array();
  for (const auto& row : table.irreducibles) {
    Json values = Json::array();
    for (const auto& v : row) values.push_back(to_json(v));
    chars.push_back(std::move(values));
  }
  return {{"schema", "subdepth.character-table"},
          {"version", kTableSchemaVersion},
          {"fingerprint", std::move(fp)},
          {"group", g.label()},
          {"class_representatives", std::move(reps)},
          {"class_sizes", cls.class_sizes},
          {"conductor", table.conductor},
          {"degrees", table.degrees},
          {"characters", std::move(chars)}};
}

CharacterTable table_from_json(const Json& j, const PermutationGroup& g) {
  if (field<std::string>(j, "schema") != "subdepth.character-table" || field<int>(j, "version") != kTableSchemaVersion) {
    throw Error(ErrorCode::TableMismatch, "unsupported table schema or version");
  }
  if (field<std::string>(j.at("fingerprint"), "key") != fingerprint(g)) {
    throw Error(ErrorCode::TableMismatch, "fingerprint does not match the group");
  }
  const auto& cls = g.classes();
  const auto reps = field<std::vector<std::string>>(j, "class_representatives");
  if (reps.size() != cls.size()) throw Error(ErrorCode::TableMismatch, "class count differs");
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (reps[k] != cls.representatives[k].to_cycle_string()) {
      throw Error(ErrorCode::TableMismatch, "class representative " + std::to_string(k) + " differs");
    }
  }
  CharacterTable table;
  table.group = g;
  table.conductor = field<unsigned>(j, "conductor");
  table.degrees = field<std::vector<std::size_t>>(j, "degrees");
  const auto& chars = j.at("characters");
  if (!chars.is_array() || chars.size() != cls.size() || table.degrees.size() != cls.size()) {
    throw Error(ErrorCode::TableMismatch, "character count differs from class count");
  }
  for (const auto& row : chars) {
    if (!row.is_array() || row.size() != cls.size()) throw Error(ErrorCode::TableMismatch, "row length differs");
    std::vector<Cyclotomic> values;
    for (const auto& v : row) values.push_back(cyclotomic_from_json(v));
    table.irreducibles.push_back(std::move(values));
  }
  return table;
}

Json to_json(const DepthReport& r, const SerializeOptions& opt) {
  Json j = {{"d", r.d}, {"d_odd", r.d_odd}, {"d_h", r.d_h}, {"search_cap", r.search_cap},
            {"ladder_holds", r.ladder_holds()}};
  j["d_even"] = r.d_even ? Json(*r.d_even) : Json(nullptr);
  if (opt.certificates) {
    j["certificates"] = {{"depth", to_json(r.depth_certificate)},
                         {"odd", to_json(r.odd_certificate)},
                         {"even", r.even_certificate ? to_json(*r.even_certificate) : Json(nullptr)},
                         {"h", to_json(r.h_certificate)}};
  }
  return j;
}

DepthReport depth_report_from_json(const Json& j) {
  DepthReport r;
  r.d = field<int>(j, "d");
  r.d_odd = field<int>(j, "d_odd");
  r.d_h = field<int>(j, "d_h");
  r.search_cap = field<int>(j, "search_cap");
  if (j.contains("d_even") && !j.at("d_even").is_null()) r.d_even = j.at("d_even").get<int>();
  if (j.contains("certificates")) {
    const auto& c = j.at("certificates");
    r.depth_certificate = certificate_from_json(c.at("depth"));
    r.odd_certificate = certificate_from_json(c.at("odd"));
    if (!c.at("even").is_null()) r.even_certificate = certificate_from_json(c.at("even"));
    r.h_certificate = certificate_from_json(c.at("h"));
  }
  return r;
}

Json to_json(const IntervalCheck& c) {
  return {{"module_depth", c.module_depth}, {"depth", c.depth}, {"lower", c.lower}, {"upper", c.upper},
          {"holds", c.holds}};
}

Json to_json(const ModuleDepthReport& r) {
  Json mult = Json::array();
  for (const auto& m : r.multiplicities) mult.push_back(to_json(m));
  Json values = Json::array();
  for (const auto& v : r.character.values()) values.push_back(to_json(v));
  return {{"character", std::move(values)},
          {"multiplicities", std::move(mult)},
          {"support_chain", index_sets(r.support_chain)},
          {"cumulative_chain", index_sets(r.cumulative_chain)},
          {"depth", r.depth},
          {"ell", r.ell},
          {"faithful_at", r.faithful_at ? Json(*r.faithful_at) : Json(nullptr)},
          {"kernel_order", r.kernel_subgroup.order()}};
}

Json to_json(const DoubleDepthReport& r, const SerializeOptions& opt) {
  Json values = Json::array();
  for (const auto& v : r.chi_ad.values()) values.push_back(to_json(v));
  Json j = {{"classes", r.chi_ad.size()},
            {"chi_ad", std::move(values)},
            {"S", to_json(r.s)},
            {"centerless", r.centerless},
            {"center_order", r.center_order},
            {"ell_Q", r.ell_q ? Json(*r.ell_q) : Json(nullptr)},
            {"adjoint_module_depth", r.adjoint_module_depth},
            {"d_odd", r.d_odd_double},
            {"d", r.d_double ? Json(*r.d_double) : Json(nullptr)},
            {"lower", r.lower},
            {"upper", r.upper},
            {"components", r.components},
            {"S_has_zero", r.s_has_zero},
            {"S_squared_positive", r.s_squared_positive},
            {"consistent", r.consistent}};
  if (opt.certificates) j["certificate"] = to_json(r.odd_certificate);
  return j;
}

Json to_json(const DiagonalDepthReport& r, const SerializeOptions& opt) {
  return {{"group_order", r.group_order},
          {"M", to_json(r.matrix.entries)},
          {"depth", to_json(r.depth, opt)},
          {"centerless", r.centerless},
          {"predicted", r.predicted ? Json(*r.predicted) : Json(nullptr)},
          {"consistent", r.consistent}};
}

Json to_json(const CorefreeReport& r, const SerializeOptions& opt) {
  return {{"core_order", r.core_order},
          {"corefree", r.corefree},
          {"quotient_order", r.quotient_order},
          {"quotient_subgroup_order", r.quotient_subgroup_order},
          {"original", to_json(r.original, opt)},
          {"quotient", to_json(r.quotient, opt)},
          {"module_depth", r.module_depth},
          {"quotient_module_depth", r.quotient_module_depth},
          {"inequality_holds", r.inequality_holds},
          {"intervals_hold", r.intervals_hold},
          {"holds", r.holds()}};
}

Json to_json(const SupportChainReport& r) {
  return {{"supports", index_sets(r.supports)},
          {"cumulative", index_sets(r.cumulative)},
          {"kernel_classes", index_sets(r.kernel_classes)},
          {"kernel_orders", r.kernel_orders},
          {"ell", r.ell},
          {"stable_support", r.stable_support},
          {"stable_kernel_order", r.stable_kernel.order()},
          {"kernel_matches", r.kernel_matches},
          {"bound_holds", r.bound_holds}};
}

Json to_json(const BurnsideBrauerReport& r) {
  return {{"distinct_values", r.distinct_values}, {"ell", r.ell}, {"holds", r.holds}};
}

Json to_json(const AlgebraMatrixData& d) {
  Json j = {{"label", d.label}, {"r", d.r}, {"s", d.s}, {"M", to_json(d.M)}, {"N", to_json(d.N)},
            {"C", to_json(d.C)}, {"D", to_json(d.D)}, {"algebraically_closed", d.algebraically_closed}};
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

AlgebraMatrixData algebra_data_from_json(const Json& j) {
  AlgebraMatrixData d;
  d.label = j.value("label", std::string{});
  d.r = field<std::size_t>(j, "r");
  d.s = field<std::size_t>(j, "s");
  d.M = matrix_from_json(j.at("M"));
  d.N = matrix_from_json(j.at("N"));
  d.C = matrix_from_json(j.at("C"));
  d.D = matrix_from_json(j.at("D"));
  d.algebraically_closed = j.value("algebraically_closed", false);
  d.note = j.value("note", std::string{});
  return d;
}

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"row", v.row}, {"col", v.col}, {"DM", to_json(v.dm)}, {"NC", to_json(v.nc)}});
  }
  return {{"ok", r.ok()}, {"problems", r.problems}, {"relation_checked", r.relation_checked},
          {"violations", std::move(violations)}};
}

Json to_json(const NecessaryConditionResult& r, const SerializeOptions& opt) {
  Json j = {{"n", r.n}, {"parity", to_string(r.parity)}, {"holds", r.holds},
            {"tested_depth", r.parity == Parity::Even ? 2 * r.n : 2 * r.n + 1}};
  if (opt.certificates) j["certificate"] = to_json(r.certificate);
  return j;
}

}  // namespace subdepth
