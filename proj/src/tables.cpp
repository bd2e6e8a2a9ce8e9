#include "sbs/tables.hpp"

#include <cctype>
#include <sstream>

#include "sbs/json_io.hpp"

namespace sbs {

namespace {

[[noreturn]] void reject_alias(PgName name, int n, const std::string& alias) {
  fail(errc::bad_parameter,
       to_string(name) + " with n=" + std::to_string(n) + " is the same group as " + alias +
           "; use that token for table lookups");
}

void check_table_n(PgName name, int n) {
  if (!is_axial(name)) {
    if (n != 0) fail(errc::bad_parameter, "n given for a non-axial name");
    return;
  }
  if (n < 1) fail(errc::bad_parameter, "axial family needs n >= 1");
  if (n >= 2) return;
  switch (name) {
    case PgName::Cn: reject_alias(name, n, "C1");
    case PgName::Cnv: reject_alias(name, n, "Cs");
    case PgName::Cnh: reject_alias(name, n, "Cs");
    case PgName::S2n: reject_alias(name, n, "Ci");
    case PgName::Dn: reject_alias(name, n, "Cn with n=2");
    case PgName::Dnd: reject_alias(name, n, "Cnh with n=2");
    case PgName::Dnh: reject_alias(name, n, "Cnv with n=2");
    default: fail(errc::bad_parameter, "bad axial parameter");
  }
}

}  // namespace

NormalizerRef normalizer_name_of(PgName name, int n) {
  check_table_n(name, n);
  switch (name) {
    case PgName::C1:
    case PgName::Ci:
      return {PgName::Kh, 0};
    case PgName::Cs:
    case PgName::Cn:
    case PgName::S2n:
    case PgName::Cnh:
      return {PgName::Dinfh, 0};
    case PgName::Cnv:
    case PgName::Dnd:
      return {PgName::Dnh, 2 * n};
    case PgName::Dn:
    case PgName::Dnh:
      // D2 and D2h sit inside the cubic row: their normalizer is Oh, not D4h.
      if (n == 2) return {PgName::Oh, 0};
      return {PgName::Dnh, 2 * n};
    case PgName::T:
    case PgName::Td:
    case PgName::Th:
    case PgName::O:
    case PgName::Oh:
      return {PgName::Oh, 0};
    case PgName::I:
    case PgName::Ih:
      return {PgName::Ih, 0};
    default:
      fail(errc::unknown_name, "normalizer table covers finite names only");
  }
}

std::pair<Mat3, PointGroup> normalizer_of(PgName name, int n) {
  NormalizerRef ref = normalizer_name_of(name, n);
  if (!is_finite_name(ref.name))
    return {Mat3::Identity(), symbolic_point_group(Mat3::Identity(), ref.name)};
  return {Mat3::Identity(), canonical_point_group(ref.name, ref.n)};
}

Mat3 evaluate_word(const Presentation& p, const std::string& word) {
  Mat3 out = Mat3::Identity();
  size_t i = 0;
  while (i < word.size()) {
    char sym = word[i++];
    if (sym == 'e') continue;
    int gen = -1;
    for (size_t k = 0; k < p.generator_names.size(); ++k)
      if (p.generator_names[k] == sym) gen = static_cast<int>(k);
    if (gen < 0) fail(errc::invalid_input, std::string("unknown generator symbol: ") + sym);
    int exp = 0;
    while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i])))
      exp = exp * 10 + (word[i++] - '0');
    if (exp == 0) exp = 1;
    for (int k = 0; k < exp; ++k) out = out * p.generator_mats[gen];
  }
  return out;
}

Presentation presentation_of(const std::string& family, int n) {
  Presentation p;
  p.family = family;
  if (family == "D(2n)h") {
    if (n < 2) fail(errc::bad_parameter, "D(2n)h presentation needs n >= 2");
    p.generator_names = {'a', 'b', 'm'};
    p.generator_mats = {rot_z(M_PI / n), rot_x(M_PI), sigma_v(0.0)};
    p.relators = {"a" + std::to_string(2 * n), "b2", "m2", "abab", "amam", "bmbm"};
  } else if (family == "Oh") {
    p.generator_names = {'a', 'b', 'i'};
    p.generator_mats = {rot_z(M_PI / 2), rot_x(M_PI / 2), inversion()};
    p.relators = {"a4", "b4", "i2", "abaaba", "ababab", "iaia3", "ibib3"};
  } else if (family == "Ih") {
    p.generator_names = {'a', 'b', 'i'};
    std::vector<Mat3> gens = canonical_generators(PgName::Ih, 0);
    p.generator_mats = {gens[0], gens[1], gens[2]};
    p.relators = {"a5", "b2", "ababab", "i2", "iaia4", "ibib"};
  } else {
    fail(errc::unknown_name, "no tabulated presentation for " + family);
  }
  return p;
}

std::pair<MatrixGroup, std::map<char, Mat3>> realize_presentation(const std::string& family,
                                                                  int n) {
  Presentation p = presentation_of(family, n);
  for (const std::string& rel : p.relators) {
    if (!mat_close(evaluate_word(p, rel), Mat3::Identity()))
      fail(errc::relator_violation, "relator " + rel + " does not hold in the realization");
  }
  MatrixGroup g = MatrixGroup::from_generators(p.generator_mats);
  int expected = family == "D(2n)h" ? 8 * n : (family == "Oh" ? 48 : 120);
  if (g.order() != expected)
    fail(errc::relator_violation, "realized presentation has unexpected order");
  std::map<char, Mat3> gens;
  for (size_t k = 0; k < p.generator_names.size(); ++k)
    gens[p.generator_names[k]] = p.generator_mats[k];
  return {std::move(g), std::move(gens)};
}

ComplementRow complement_row_of(PgName name, int n) {
  check_table_n(name, n);
  ComplementRow row;
  auto in_d2nh = [&](std::vector<std::string> s, std::vector<std::string> h) {
    row.normalizer_family = "D(2n)h";
    row.subgroup_words = std::move(s);
    row.complement_words = std::move(h);
  };
  auto in_oh = [&](std::vector<std::string> s, std::vector<std::string> h) {
    row.normalizer_family = "Oh";
    row.subgroup_words = std::move(s);
    row.complement_words = std::move(h);
  };
  switch (name) {
    case PgName::C1:
      row.symbolic_complements = {PgName::Kh};
      return row;
    case PgName::Ci:
      row.symbolic_complements = {PgName::K};
      return row;
    case PgName::Cs:
      row.symbolic_complements = {PgName::Cinfv, PgName::Dinf};
      return row;
    case PgName::Cn:
    case PgName::S2n:
    case PgName::Cnh:
      // no complement in the (infinite) normalizer
      return row;
    case PgName::Cnv:
      in_d2nh({"a2", "m"}, {"am", "bm"});
      return row;
    case PgName::Dnd:
      in_d2nh({"a2", "abm", "m"}, {"bm"});
      return row;
    case PgName::Dnh:
      if (n == 2) in_oh({"a2", "b2", "i"}, {"ab", "ba2"});
      else in_d2nh({"a2", "b", "m"}, {"am"});
      return row;
    case PgName::Dn:
      if (n == 2) in_oh({"a2", "b2"}, {"ab", "ba2", "i"});
      else in_d2nh({"a2", "b"}, {"am", "bm"});
      return row;
    case PgName::T:
      in_oh({"ab", "ba"}, {"a2b", "i"});
      return row;
    case PgName::Td:
      in_oh({"ab", "ba", "ai"}, {"a2b"});
      return row;
    case PgName::Th:
      in_oh({"ab", "ba", "i"}, {"a2b"});
      return row;
    case PgName::O:
      in_oh({"a", "b"}, {"i"});
      return row;
    case PgName::Oh:
      in_oh({"a", "b", "i"}, {});
      return row;
    case PgName::I:
      row.normalizer_family = "Ih";
      row.subgroup_words = {"a", "b"};
      row.complement_words = {{"i"}};
      return row;
    case PgName::Ih:
      row.normalizer_family = "Ih";
      row.subgroup_words = {"a", "b", "i"};
      row.complement_words = std::vector<std::string>{};
      return row;
    default:
      fail(errc::unknown_name, "complement table covers finite names only");
  }
}

std::optional<std::pair<std::vector<std::string>, PointGroup>> complement_in_normalizer(
    PgName name, int n) {
  ComplementRow row = complement_row_of(name, n);
  if (!row.symbolic_complements.empty()) {
    PointGroup first = symbolic_point_group(Mat3::Identity(), row.symbolic_complements.front());
    return std::make_pair(std::vector<std::string>{}, first);
  }
  if (!row.complement_words.has_value()) return std::nullopt;
  Presentation p = presentation_of(row.normalizer_family, row.normalizer_family == "D(2n)h" ? n : 0);
  std::vector<Mat3> gens;
  for (const std::string& w : *row.complement_words) gens.push_back(evaluate_word(p, w));
  if (gens.empty()) gens.push_back(Mat3::Identity());
  MatrixGroup h = MatrixGroup::from_generators(gens);
  return std::make_pair(*row.complement_words, identify_point_group(h));
}

IrrepObject canonical_breaking_object(PgName name, int n) {
  check_table_n(name, n);
  auto in_plane = [](double azimuth) {
    return IrrepObject::vector3(Vec3(std::cos(azimuth), std::sin(azimuth), 0.0));
  };
  switch (name) {
    case PgName::C1:
      return IrrepObject::scalar(1.0);
    case PgName::Ci:
      return IrrepObject::scalar(1.0, Parity::odd);
    case PgName::Cs:
      return IrrepObject::vector3(Vec3::UnitZ());
    case PgName::Cn:
    case PgName::S2n:
      return IrrepObject::vector3(Vec3::UnitX());
    case PgName::Cnh:
      return IrrepObject::vector3(Vec3(2, 0, 1).normalized());
    case PgName::Cnv:
      // The canonical group keeps the yz mirror; tilt half a step past it.
      return in_plane(M_PI / 2 + M_PI / (2 * n));
    case PgName::Dn:
      if (n == 2) return IrrepObject::quadrupole_along(Vec3(1, 1, 1));
      return in_plane(M_PI / (2 * n));
    case PgName::Dnh:
      if (n == 2)
        return IrrepObject::scalar(1.0, Parity::odd)
            .append(IrrepObject::quadrupole_along(Vec3(1, 1, 1)));
      {
        double t = M_PI / (2 * n);
        return IrrepObject::vector3(Vec3(2 * std::cos(t), 2 * std::sin(t), 1).normalized());
      }
    case PgName::Dnd:
      return in_plane(M_PI / (4 * n));
    case PgName::T:
      return IrrepObject::vector3(Vec3(0, 1, 1).normalized(), Parity::even)
          .append(IrrepObject::quadrupole_along(Vec3(0, 1, 1)));
    case PgName::Td:
    case PgName::Th:
      return IrrepObject::scalar(1.0, Parity::odd)
          .append(IrrepObject::vector3(Vec3(0, 1, 1).normalized()));
    case PgName::O:
    case PgName::I:
      return IrrepObject::quadrupole_along(Vec3(1, 2, 3));
    case PgName::Oh:
    case PgName::Ih:
      return IrrepObject::vector3(Vec3(1, 2, 3).normalized());
    default:
      fail(errc::unknown_name, "no canonical breaking object for symbolic names");
  }
}

std::vector<std::pair<PgName, int>> table_instances(int max_n) {
  std::vector<std::pair<PgName, int>> out = {
      {PgName::C1, 0}, {PgName::Ci, 0}, {PgName::Cs, 0}};
  for (PgName name : {PgName::Cn, PgName::Cnv, PgName::Cnh, PgName::S2n, PgName::Dn,
                      PgName::Dnd, PgName::Dnh})
    for (int n = 2; n <= max_n; ++n) out.emplace_back(name, n);
  for (PgName name : {PgName::T, PgName::Td, PgName::Th, PgName::O, PgName::Oh, PgName::I,
                      PgName::Ih})
    out.emplace_back(name, 0);
  return out;
}

std::string tables_json_dump() {
  nlohmann::json doc;
  doc["version"] = 1;
  nlohmann::json rows = nlohmann::json::array();
  for (auto [name, n] : table_instances(8)) {
    nlohmann::json row;
    row["family"] = to_string(name);
    if (n > 0) row["n"] = n;
    NormalizerRef ref = normalizer_name_of(name, n);
    row["normalizer"] = to_string(ref.name);
    if (ref.n > 0) row["normalizer_n"] = ref.n;
    ComplementRow cr = complement_row_of(name, n);
    if (!cr.normalizer_family.empty()) {
      row["presentation"] = cr.normalizer_family;
      row["subgroup_words"] = cr.subgroup_words;
    }
    if (cr.complement_words.has_value())
      row["complement_words"] = *cr.complement_words;
    else if (!cr.symbolic_complements.empty()) {
      nlohmann::json names = nlohmann::json::array();
      for (PgName s : cr.symbolic_complements) names.push_back(to_string(s));
      row["symbolic_complements"] = names;
    } else {
      row["complement_words"] = nullptr;
    }
    row["breaking_object"] = to_json(canonical_breaking_object(name, n));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2);
}

}  // namespace sbs
