#pragma once

// Lattice paths over U=(1,1), D=(1,-1), H=(1,0): classification, peak
// removal and restoration, textual and ASCII rendering.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permdek {

enum class Step : char { up = 'U', down = 'D', flat = 'H' };

enum class PathClass { dyck, weak_dyck, peakless_weak_dyck, invalid };

std::string_view to_string(PathClass c);

class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step sequence together with its most specific class. Paths that dip
/// below the axis or fail to return to it are kept, classified `invalid`,
/// with the index of the first offending step (the path length when the
/// only problem is a nonzero final height).
///
/// The empty path is classified `dyck`; it also satisfies
/// is_peakless_weak_dyck().
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps);

  /// Parses a word over {U,D,H}; whitespace is ignored.
  static LatticePath parse(std::string_view word);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  PathClass path_class() const noexcept { return class_; }
  std::optional<std::size_t> violation() const noexcept { return violation_; }

  bool is_weak_dyck() const noexcept { return class_ != PathClass::invalid; }
  bool is_dyck() const noexcept { return class_ == PathClass::dyck; }
  bool is_peakless_weak_dyck() const noexcept;
  bool has_peak() const noexcept;

  /// Number of values a machine processes along this path: #U + #H.
  int span() const noexcept;
  int peak_count() const noexcept;

  std::string word() const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps_ == b.steps_;
  }

 private:
  std::vector<Step> steps_;
  PathClass class_ = PathClass::dyck;
  std::optional<std::size_t> violation_;
};

inline LatticePath classify_path(std::vector<Step> steps) {
  return LatticePath(std::move(steps));
}
inline LatticePath classify_path(std::string_view word) {
  return LatticePath::parse(word);
}

/// Replaces each UD with H. Requires a Dyck path.
LatticePath remove_peaks(const LatticePath& path);

/// Replaces each H with UD. Requires a peakless weak Dyck path.
LatticePath restore_peaks(const LatticePath& path);

/// Draws the height profile on a character grid using '/', '\\' and '_',
/// highest row first.
std::string render_ascii(const LatticePath& path);

}  // namespace permdek
