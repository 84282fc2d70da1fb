#include "grw/io.hpp"

#include <fstream>
#include <sstream>

namespace grw {

namespace {

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of integers");
  std::vector<std::int64_t> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must contain integers");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

BaseElt base_coeff_from_json(const BaseField& base, const Json& j, const char* what) {
  if (j.is_number_integer()) {
    if (base.degree() != 1)
      throw ParseError(std::string(what) + ": coefficients must be length-e lists when e > 1");
    return base.from_int(j.get<std::int64_t>());
  }
  if (j.is_array()) {
    if (base.degree() == 1)
      throw ParseError(std::string(what) + ": coefficients must be plain integers when e = 1");
    return base.from_digits(int_list(j, what));
  }
  throw ParseError(std::string(what) + ": expected an integer or a list");
}

OrderedJson base_coeff_to_json(const BaseField& base, BaseElt c) {
  if (base.degree() == 1) return OrderedJson(static_cast<std::int64_t>(c));
  return OrderedJson(base.digits(c));
}

BasePoly base_poly_from_json(const BaseField& base, const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a coefficient list");
  BasePoly p;
  for (const auto& x : j) p.push_back(base_coeff_from_json(base, x, what));
  return p;
}

ExtElt ext_elt_from_json(const ExtField& ext, const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": entries must be length-m lists");
  if (j.size() != static_cast<std::size_t>(ext.m()))
    throw ParseError(std::string(what) + ": entry length does not match m");
  BasePoly coeffs;
  for (const auto& x : j) coeffs.push_back(base_coeff_from_json(ext.base(), x, what));
  return ext.from_coeffs(std::move(coeffs));
}

OrderedJson ext_elt_to_json(const ExtField& ext, const ExtElt& e) {
  OrderedJson arr = OrderedJson::array();
  for (BaseElt c : e.c) arr.push_back(base_coeff_to_json(ext.base(), c));
  return arr;
}

std::vector<std::vector<Count>> counts_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of rows");
  std::vector<std::vector<Count>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(std::string(what) + " rows must be lists");
    std::vector<Count> r;
    for (const auto& x : row) {
      if (!x.is_string()) throw ParseError(std::string(what) + " counts must be decimal strings");
      r.push_back(count_from_decimal(x.get<std::string>()));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

OrderedJson counts_to_json(const std::vector<std::vector<Count>>& rows) {
  OrderedJson out = OrderedJson::array();
  for (const auto& row : rows) {
    OrderedJson r = OrderedJson::array();
    for (const auto& x : row) r.push_back(to_decimal(x));
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("key '") + key + "' has the wrong type");
  }
}

}  // namespace

LinearCode code_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("code file must be a JSON object");
  const auto p = require<std::int64_t>(j, "p");
  const auto e = require<int>(j, "e");
  const auto m = require<int>(j, "m");
  if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<std::int64_t>() < 1 ||
      j.at("n").get<std::int64_t>() > 1'000'000)
    throw ParseError("n must be a positive integer");
  const auto n = j.at("n").get<std::size_t>();

  std::optional<std::vector<std::int64_t>> base_modulus;
  if (j.contains("base_modulus")) base_modulus = int_list(j.at("base_modulus"), "base_modulus");
  if (e > 1 && !base_modulus) throw ParseError("base_modulus is required when e > 1");

  try {
    // Construct the base level first so ext_modulus coefficients can be read.
    BaseField base = e == 1 ? BaseField(p) : BaseField(p, *base_modulus);
    if (base.degree() != e) throw ParseError("base_modulus degree does not match e");
    if (!j.contains("ext_modulus")) throw ParseError("missing key 'ext_modulus'");
    BasePoly em = base_poly_from_json(base, j.at("ext_modulus"), "ext_modulus");
    FieldSpec fs(p, e, m, base_modulus, em);

    if (!j.contains("generator") || !j.at("generator").is_array())
      throw ParseError("missing generator matrix");
    const auto& gj = j.at("generator");
    if (gj.empty()) throw ParseError("generator matrix must have at least one row");
    Mat<ExtField> gen(gj.size(), n, fs.ext().zero());
    for (std::size_t i = 0; i < gj.size(); ++i) {
      const auto& rowj = gj.at(i);
      if (!rowj.is_array() || rowj.size() != n)
        throw ParseError("generator rows must have length n");
      for (std::size_t c = 0; c < n; ++c)
        gen.at(i, c) = ext_elt_from_json(fs.ext(), rowj.at(c), "generator");
    }
    return LinearCode(std::move(fs), std::move(gen));
  } catch (const InvalidInput&) {
    throw;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed code file: ") + ex.what());
  }
}

OrderedJson code_document_json(const FieldSpec& fs, const Mat<ExtField>& generator_rows) {
  LinearCode validated(fs, generator_rows);  // rank and shape checks
  OrderedJson j;
  j["p"] = fs.p();
  j["e"] = fs.e();
  if (fs.e() > 1) j["base_modulus"] = fs.base().modulus();
  j["m"] = fs.m();
  {
    OrderedJson em = OrderedJson::array();
    for (BaseElt cc : fs.ext().modulus()) em.push_back(base_coeff_to_json(fs.base(), cc));
    j["ext_modulus"] = std::move(em);
  }
  j["n"] = validated.n();
  j["k"] = validated.k();
  {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t i = 0; i < generator_rows.rows; ++i) {
      OrderedJson row = OrderedJson::array();
      for (std::size_t cc = 0; cc < generator_rows.cols; ++cc)
        row.push_back(ext_elt_to_json(fs.ext(), generator_rows.at(i, cc)));
      rows.push_back(std::move(row));
    }
    j["generator"] = std::move(rows);
  }
  return j;
}

OrderedJson code_to_json(const LinearCode& c) { return code_document_json(c.field(), c.generator()); }

LinearCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + ex.what());
  }
  return code_from_json(j);
}

void save_code_file(const LinearCode& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write code file: " + path);
  out << code_to_json(c).dump(2) << '\n';
}

OrderedJson distribution_to_json(const DistributionTable& t) {
  OrderedJson j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["q"] = t.q;
  j["m"] = t.m;
  j["rows"] = counts_to_json(t.rows);
  return j;
}

DistributionTable distribution_from_json(const Json& j) {
  DistributionTable t;
  t.n = require<std::size_t>(j, "n");
  t.k = require<std::size_t>(j, "k");
  t.q = require<std::uint64_t>(j, "q");
  t.m = require<int>(j, "m");
  if (!j.contains("rows")) throw ParseError("missing key 'rows'");
  t.rows = counts_from_json(j.at("rows"), "rows");
  if (t.rows.size() != t.k + 1) throw ParseError("distribution table has wrong row count");
  for (const auto& r : t.rows)
    if (r.size() != t.n + 1) throw ParseError("distribution table has wrong column count");
  return t;
}

OrderedJson btable_to_json(const BTable& t) {
  OrderedJson j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["q"] = t.q;
  j["m"] = t.m;
  j["rows"] = counts_to_json(t.rows);
  return j;
}

BTable btable_from_json(const Json& j) {
  BTable t;
  t.n = require<std::size_t>(j, "n");
  t.k = require<std::size_t>(j, "k");
  t.q = require<std::uint64_t>(j, "q");
  t.m = require<int>(j, "m");
  if (!j.contains("rows")) throw ParseError("missing key 'rows'");
  t.rows = counts_from_json(j.at("rows"), "rows");
  if (t.rows.size() != t.n + 1) throw ParseError("B-table has wrong row count");
  for (const auto& r : t.rows)
    if (r.size() != t.k + 1) throw ParseError("B-table has wrong column count");
  return t;
}

OrderedJson enumerator_to_json(const EnumeratorPoly& e) {
  OrderedJson j;
  j["r"] = e.r;
  j["n"] = e.n();
  OrderedJson coeffs = OrderedJson::array();
  for (const auto& c : e.poly.coeff) coeffs.push_back(to_decimal(c));
  j["coefficients"] = std::move(coeffs);
  j["polynomial"] = e.poly.str();
  return j;
}

std::string distribution_to_csv(const DistributionTable& t) {
  std::ostringstream os;
  os << "r,w,count\n";
  for (std::size_t r = 0; r <= t.k; ++r)
    for (std::size_t w = 0; w <= t.n; ++w) os << r << ',' << w << ',' << to_decimal(t.rows[r][w]) << '\n';
  return os.str();
}

std::string distribution_to_latex(const DistributionTable& t) {
  std::ostringstream os;
  for (std::size_t r = 0; r <= t.k; ++r) {
    os << r;
    for (std::size_t w = 0; w <= t.n; ++w) os << " & " << to_decimal(t.rows[r][w]);
    os << " \\\\\n";
  }
  return os.str();
}

}  // namespace grw
