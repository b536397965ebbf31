#include "schroder/path.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace schroder {

namespace {

constexpr StepSet kAllSteps{StepSetId::S4};

char kind_letter(StepKind k) {
  switch (k) {
    case StepKind::Up: return 'U';
    case StepKind::Down: return 'D';
    case StepKind::Horizontal: return 'H';
  }
  return '?';
}

void require_valid(const LatticePath& path, const char* op) {
  if (!validate(path, kAllSteps)) {
    throw std::invalid_argument(std::string(op) + ": not a valid lattice path: '" + path.to_string() + "'");
  }
}

}  // namespace

StepSet StepSet::parse(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'S' || name[0] == 's') && name[1] >= '1' && name[1] <= '6') {
    return StepSet(static_cast<StepSetId>(name[1] - '1'));
  }
  throw std::invalid_argument("unknown step set '" + std::string(name) + "' (expected S1..S6)");
}

std::string_view StepSet::name() const {
  static constexpr std::string_view names[] = {"S1", "S2", "S3", "S4", "S5", "S6"};
  return names[static_cast<int>(id_)];
}

std::string_view to_string(Variant v) { return v == Variant::L ? "L" : "A"; }

Variant parse_variant(std::string_view text) {
  if (text == "L" || text == "l") return Variant::L;
  if (text == "A" || text == "a") return Variant::A;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected L or A)");
}

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  std::size_t i = 0;
  while (i < text.size()) {
    StepKind kind;
    switch (text[i]) {
      case 'U': kind = StepKind::Up; break;
      case 'D': kind = StepKind::Down; break;
      case 'H': kind = StepKind::Horizontal; break;
      default:
        throw std::invalid_argument("bad step character '" + std::string(1, text[i]) + "' at offset " +
                                    std::to_string(i));
    }
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    int magnitude = 1;
    if (i > start) {
      std::string_view digits = text.substr(start, i - start);
      // the printer never emits an explicit 1, a zero, or a leading zero
      if (digits.front() == '0' || digits == "1" || digits.size() > 6) {
        throw std::invalid_argument("bad magnitude '" + std::string(digits) + "' at offset " +
                                    std::to_string(start));
      }
      magnitude = std::stoi(std::string(digits));
    }
    steps.push_back({kind, magnitude});
  }
  return LatticePath(std::move(steps));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (const Step& s : steps_) {
    out += kind_letter(s.kind);
    if (s.magnitude != 1) out += std::to_string(s.magnitude);
  }
  return out;
}

long LatticePath::width() const {
  long w = 0;
  for (const Step& s : steps_) w += s.width();
  return w;
}

std::vector<long> LatticePath::heights() const {
  std::vector<long> h;
  h.reserve(steps_.size() + 1);
  long y = 0;
  h.push_back(y);
  for (const Step& s : steps_) {
    y += s.rise();
    h.push_back(y);
  }
  return h;
}

LatticePath& LatticePath::append(const LatticePath& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  return *this;
}

bool validate(const LatticePath& path, const StepSet& steps) {
  long y = 0;
  long w = 0;
  for (const Step& s : path.steps()) {
    if (!steps.admits(s)) return false;
    y += s.rise();
    w += s.width();
    if (y < 0) return false;
  }
  return y == 0 && w % 2 == 0;
}

PathStats stats(const LatticePath& path) {
  if (path.empty()) throw std::invalid_argument("stats: the empty path has no statistics");
  require_valid(path, "stats");
  PathStats st;
  st.order = path.width() / 2;
  for (std::size_t v = 1; v < path.size(); ++v) {
    const Step& a = path[v - 1];
    const Step& b = path[v];
    if (a == b) {
      if (a.diagonal()) {
        ++st.dr;
      } else {
        ++st.hr;
      }
    }
    if (a.kind == StepKind::Up && b.kind == StepKind::Down) ++st.peaks;
  }
  st.runs = st.dr + st.hr;
  if (is_dyck(path)) st.pyramid_weight = pyramid_weight(path);
  return st;
}

bool is_dyck(const LatticePath& path) { return validate(path, StepSet(StepSetId::S1)); }

long pyramid_weight(const LatticePath& path) {
  if (!is_dyck(path)) throw std::invalid_argument("pyramid_weight: not a Dyck path: '" + path.to_string() + "'");
  // Every maximal pyramid is centred on exactly one peak; its height is the
  // shorter of the up-run ending there and the down-run leaving it.
  long weight = 0;
  const std::size_t s = path.size();
  for (std::size_t v = 1; v < s; ++v) {
    if (path[v - 1].kind != StepKind::Up || path[v].kind != StepKind::Down) continue;
    long h = 1;
    while (static_cast<long>(v) - h - 1 >= 0 && v + h < s && path[v - h - 1].kind == StepKind::Up &&
           path[v + h].kind == StepKind::Down) {
      ++h;
    }
    weight += h;
  }
  return weight;
}

bool is_primitive(const LatticePath& path) {
  if (path.empty()) return false;
  const auto h = path.heights();
  return std::all_of(h.begin() + 1, h.end() - 1, [](long y) { return y > 0; });
}

std::vector<LatticePath> primitive_factorization(const LatticePath& path) {
  require_valid(path, "primitive_factorization");
  std::vector<LatticePath> factors;
  LatticePath current;
  long y = 0;
  for (const Step& s : path.steps()) {
    if (y == 0 && s.kind == StepKind::Horizontal) {
      throw std::invalid_argument("primitive_factorization: horizontal step on the axis in '" + path.to_string() +
                                  "'");
    }
    current.append(s);
    y += s.rise();
    if (y == 0) {
      factors.push_back(std::move(current));
      current = LatticePath();
    }
  }
  return factors;
}

std::string_view to_string(UClass c) {
  switch (c) {
    case UClass::U1: return "U1";
    case UClass::U2: return "U2";
    case UClass::U3: return "U3";
    case UClass::U4: return "U4";
    case UClass::HOnly: return "H-only";
  }
  return "?";
}

UClass classify_u(const LatticePath& path) {
  if (path.empty() || !validate(path, StepSet(StepSetId::S3))) {
    throw std::invalid_argument("classify_u: not a nonempty S3 path: '" + path.to_string() + "'");
  }
  const auto steps = path.steps();
  if (std::none_of(steps.begin(), steps.end(), [](const Step& s) { return s.kind == StepKind::Up; })) {
    return UClass::HOnly;
  }
  const bool starts_h = steps.front().kind == StepKind::Horizontal;
  const bool ends_h = steps.back().kind == StepKind::Horizontal;
  if (!starts_h && !ends_h) return UClass::U1;
  if (starts_h && !ends_h) return UClass::U2;
  if (!starts_h) return UClass::U3;
  return UClass::U4;
}

}  // namespace schroder
