#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schroder {

enum class StepKind : std::uint8_t { Up, Down, Horizontal };

/// One step of a lattice path. Up/Down of magnitude r move by (r, +-r);
/// a horizontal step of magnitude r moves by (2r, 0).
struct Step {
  StepKind kind = StepKind::Up;
  int magnitude = 1;

  static constexpr Step up(int r = 1) { return {StepKind::Up, r}; }
  static constexpr Step down(int r = 1) { return {StepKind::Down, r}; }
  static constexpr Step horizontal(int r = 1) { return {StepKind::Horizontal, r}; }

  constexpr int width() const { return kind == StepKind::Horizontal ? 2 * magnitude : magnitude; }
  constexpr int rise() const {
    switch (kind) {
      case StepKind::Up: return magnitude;
      case StepKind::Down: return -magnitude;
      case StepKind::Horizontal: return 0;
    }
    return 0;
  }
  constexpr bool diagonal() const { return kind != StepKind::Horizontal; }

  // Orders Up < Down < Horizontal, then by magnitude.
  constexpr auto operator<=>(const Step&) const = default;
};

enum class StepSetId : std::uint8_t { S1, S2, S3, S4, S5, S6 };

/// Admissible-step predicate for one of the six families S1..S6.
class StepSet {
 public:
  constexpr explicit StepSet(StepSetId id) : id_(id) {}

  /// Accepts "S1".."S6" (case-insensitive).
  static StepSet parse(std::string_view name);

  constexpr StepSetId id() const { return id_; }
  std::string_view name() const;

  constexpr bool has_horizontal() const {
    return id_ == StepSetId::S3 || id_ == StepSetId::S4 || id_ == StepSetId::S5 || id_ == StepSetId::S6;
  }
  constexpr bool unit_diagonals() const {
    return id_ == StepSetId::S1 || id_ == StepSetId::S3 || id_ == StepSetId::S5;
  }
  constexpr bool unit_horizontals() const { return id_ == StepSetId::S3 || id_ == StepSetId::S6; }

  constexpr bool admits(Step s) const {
    if (s.magnitude < 1) return false;
    if (s.kind == StepKind::Horizontal) {
      return has_horizontal() && (!unit_horizontals() || s.magnitude == 1);
    }
    return !unit_diagonals() || s.magnitude == 1;
  }

  constexpr bool operator==(const StepSet&) const = default;

 private:
  StepSetId id_;
};

/// L: all paths of the family. A: no horizontal step on the x-axis.
enum class Variant : std::uint8_t { L, A };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

/// A finite step sequence. Construction does not validate; use validate()
/// against a StepSet.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses the compact form: `U`, `D`, `H` for magnitude 1 and `U3`, `D2`,
  /// `H2` for larger magnitudes. Inverse of to_string().
  static LatticePath parse(std::string_view text);
  std::string to_string() const;

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const Step& operator[](std::size_t i) const { return steps_[i]; }

  /// Total x-displacement.
  long width() const;

  /// Heights at the size()+1 vertices, starting with 0.
  std::vector<long> heights() const;

  LatticePath& append(Step s) {
    steps_.push_back(s);
    return *this;
  }
  LatticePath& append(const LatticePath& other);

  auto operator<=>(const LatticePath&) const = default;
  bool operator==(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
};

struct PathStats {
  long order = 0;
  long dr = 0;     // vertices joining two identical up or two identical down steps
  long hr = 0;     // vertices joining two identical horizontal steps
  long peaks = 0;  // vertices joining an up step to a down step
  long runs = 0;
  std::optional<long> pyramid_weight;  // set only for Dyck paths

  bool operator==(const PathStats&) const = default;
};

/// True iff every step is admissible, the path never dips below the axis,
/// and it ends on the axis with even total width.
bool validate(const LatticePath& path, const StepSet& steps);

/// Throws std::invalid_argument for the empty path or a path that is not a
/// valid lattice path over S4 (the union of all families).
PathStats stats(const LatticePath& path);

bool is_dyck(const LatticePath& path);

/// Sum of heights of the maximal pyramids U^h D^h. Throws on non-Dyck input.
long pyramid_weight(const LatticePath& path);

/// True iff every intermediate vertex lies strictly above the axis. The
/// empty path is not primitive.
bool is_primitive(const LatticePath& path);

/// Splits at interior axis returns. Throws std::invalid_argument if the path
/// is invalid or has a horizontal step at height 0.
std::vector<LatticePath> primitive_factorization(const LatticePath& path);

enum class UClass : std::uint8_t { U1, U2, U3, U4, HOnly };

std::string_view to_string(UClass c);

/// Four-way split of U-containing S3 paths by first/last step; H-only paths
/// are reported separately. Throws on empty or non-S3 input.
UClass classify_u(const LatticePath& path);

}  // namespace schroder
