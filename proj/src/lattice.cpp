#include "zariski/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace zariski {

namespace {

void validate(const DynkinComponent& c) {
  const bool ok = (c.family == Family::A && c.index >= 1) || (c.family == Family::D && c.index >= 4) ||
                  (c.family == Family::E && c.index >= 6 && c.index <= 8);
  if (!ok) throw std::invalid_argument("invalid Dynkin component " + family_name(c.family) + std::to_string(c.index));
  if (c.multiplicity < 1) throw std::invalid_argument("Dynkin component multiplicity must be positive");
}

int parse_int(std::string_view s, std::size_t& pos) {
  const std::size_t begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == begin) return -1;
  if (pos - begin > 6) throw std::invalid_argument("Dynkin type: number too large");
  return std::stoi(std::string(s.substr(begin, pos - begin)));
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

DynkinType::DynkinType(std::vector<DynkinComponent> components) {
  std::map<std::pair<Family, int>, int> merged;
  for (const auto& c : components) {
    validate(c);
    merged[{c.family, c.index}] += c.multiplicity;
  }
  for (const auto& [key, mult] : merged) components_.push_back({key.first, key.second, mult});
  std::sort(components_.begin(), components_.end(), [](const DynkinComponent& a, const DynkinComponent& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.index > b.index;
  });
}

DynkinType DynkinType::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (s.empty()) throw std::invalid_argument("empty Dynkin type");

  std::vector<DynkinComponent> comps;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find('+', start), s.size());
    const std::string_view term(s.data() + start, end - start);
    if (term.empty()) throw std::invalid_argument("malformed Dynkin type '" + std::string(text) + "'");
    std::size_t pos = 0;
    int mult = parse_int(term, pos);
    if (mult < 0) mult = 1;
    if (pos >= term.size()) throw std::invalid_argument("malformed Dynkin term '" + std::string(term) + "'");
    Family fam;
    switch (term[pos]) {
      case 'A': fam = Family::A; break;
      case 'D': fam = Family::D; break;
      case 'E': fam = Family::E; break;
      default: throw std::invalid_argument("unknown Dynkin family in '" + std::string(term) + "'");
    }
    ++pos;
    const int index = parse_int(term, pos);
    if (index < 0 || pos != term.size()) throw std::invalid_argument("malformed Dynkin term '" + std::string(term) + "'");
    comps.push_back({fam, index, mult});
    start = end + 1;
  }
  return DynkinType(std::move(comps));
}

std::vector<DynkinComponent> DynkinType::expanded() const {
  std::vector<DynkinComponent> out;
  for (const auto& c : components_)
    for (int k = 0; k < c.multiplicity; ++k) out.push_back({c.family, c.index, 1});
  return out;
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.multiplicity * c.index;
  return r;
}

std::string DynkinType::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << '+';
    if (components_[i].multiplicity > 1) os << components_[i].multiplicity;
    os << family_name(components_[i].family) << components_[i].index;
  }
  return os.str();
}

Lattice::Lattice(IntMatrix gram, std::optional<RatMatrix> basis_in_ambient)
    : gram_(std::move(gram)), basis_(std::move(basis_in_ambient)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Lattice: Gram matrix is not square");
  if (gram_ != gram_.transpose()) throw std::invalid_argument("Lattice: Gram matrix is not symmetric");
  if (zariski::determinant(gram_) == 0) throw std::invalid_argument("Lattice: Gram matrix is degenerate");
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    if (gram_(i, i) % 2 != 0) even_ = false;
}

Rational Lattice::norm(const RatVector& v) const { return pairing(v, v); }

Rational Lattice::pairing(const RatVector& v, const RatVector& w) const {
  return (v.transpose() * gram_.cast<Rational>() * w)(0, 0);
}

IntMatrix cartan_matrix(Family family, int index) {
  validate({family, index, 1});
  IntMatrix c = IntMatrix::Zero(index, index);
  for (int i = 0; i < index; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < index; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < index - 1; ++i) link(i, i + 1);
      link(index - 3, index - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-...-n chain, node 2 attached to node 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < index; ++i) link(i, i + 1);
      break;
  }
  return c;
}

Integer root_count(Family family, int index) {
  switch (family) {
    case Family::A: return Integer(index) * (index + 1);
    case Family::D: return Integer(2) * index * (index - 1);
    case Family::E: return index == 6 ? Integer(72) : index == 7 ? Integer(126) : Integer(240);
  }
  return 0;
}

Lattice root_lattice(const DynkinType& type) {
  const int r = type.rank();
  IntMatrix g = IntMatrix::Zero(r, r);
  int offset = 0;
  for (const auto& c : type.expanded()) {
    g.block(offset, offset, c.index, c.index) = -cartan_matrix(c.family, c.index);
    offset += c.index;
  }
  return Lattice(std::move(g));
}

PolarizedRootData polarized_m0(const DynkinType& type) {
  const int r = type.rank();
  IntMatrix g = IntMatrix::Zero(r + 1, r + 1);
  if (r > 0) g.topLeftCorner(r, r) = root_lattice(type).gram();
  g(r, r) = 2;
  Integer roots = 0;
  for (const auto& c : type.components()) roots += root_count(c.family, c.index) * c.multiplicity;
  return {type, Lattice(std::move(g)), roots};
}

}  // namespace zariski
