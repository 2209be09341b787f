#include "permdek/lattice_path.hpp"

#include <algorithm>

namespace permdek {

std::string_view to_string(PathClass c) {
  switch (c) {
    case PathClass::dyck: return "dyck";
    case PathClass::weak_dyck: return "weak_dyck";
    case PathClass::peakless_weak_dyck: return "peakless_weak_dyck";
    case PathClass::invalid: return "invalid";
  }
  return "invalid";
}

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  long height = 0;
  bool flat_seen = false;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    switch (steps_[i]) {
      case Step::up: ++height; break;
      case Step::down: --height; break;
      case Step::flat: flat_seen = true; break;
    }
    if (height < 0) {
      class_ = PathClass::invalid;
      violation_ = i;
      return;
    }
  }
  if (height != 0) {
    class_ = PathClass::invalid;
    violation_ = steps_.size();
    return;
  }
  if (!flat_seen) {
    class_ = PathClass::dyck;
  } else {
    class_ = has_peak() ? PathClass::weak_dyck : PathClass::peakless_weak_dyck;
  }
}

LatticePath LatticePath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'U': steps.push_back(Step::up); break;
      case 'D': steps.push_back(Step::down); break;
      case 'H': steps.push_back(Step::flat); break;
      case ' ': case '\t': case '\n': case '\r': break;
      default:
        throw PathError("unexpected character '" + std::string(1, word[i]) +
                        "' at offset " + std::to_string(i) +
                        " (expected U, D or H)");
    }
  }
  return LatticePath(std::move(steps));
}

bool LatticePath::has_peak() const noexcept {
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (steps_[i] == Step::up && steps_[i + 1] == Step::down) return true;
  }
  return false;
}

bool LatticePath::is_peakless_weak_dyck() const noexcept {
  return is_weak_dyck() && !has_peak();
}

int LatticePath::span() const noexcept {
  return static_cast<int>(std::count_if(steps_.begin(), steps_.end(), [](Step s) {
    return s != Step::down;
  }));
}

int LatticePath::peak_count() const noexcept {
  int peaks = 0;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (steps_[i] == Step::up && steps_[i + 1] == Step::down) ++peaks;
  }
  return peaks;
}

std::string LatticePath::word() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

LatticePath remove_peaks(const LatticePath& path) {
  if (!path.is_dyck()) {
    throw PathError("remove_peaks expects a Dyck path, got " +
                    std::string(to_string(path.path_class())) + " path \"" +
                    path.word() + "\"");
  }
  const auto steps = path.steps();
  std::vector<Step> out;
  out.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::up && i + 1 < steps.size() && steps[i + 1] == Step::down) {
      out.push_back(Step::flat);
      ++i;
    } else {
      out.push_back(steps[i]);
    }
  }
  return LatticePath(std::move(out));
}

LatticePath restore_peaks(const LatticePath& path) {
  if (!path.is_peakless_weak_dyck()) {
    throw PathError("restore_peaks expects a peakless weak Dyck path, got " +
                    std::string(to_string(path.path_class())) + " path \"" +
                    path.word() + "\"");
  }
  std::vector<Step> out;
  out.reserve(path.length() * 2);
  for (Step s : path.steps()) {
    if (s == Step::flat) {
      out.push_back(Step::up);
      out.push_back(Step::down);
    } else {
      out.push_back(s);
    }
  }
  return LatticePath(std::move(out));
}

std::string render_ascii(const LatticePath& path) {
  // Row r holds the segment between heights r and r+1; flats sit on row
  // `height` drawn as '_' at the bottom of that cell.
  long height = 0;
  long lo = 0;
  long hi = 0;
  std::vector<long> row_of(path.length());
  const auto steps = path.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case Step::up: row_of[i] = height; ++height; break;
      case Step::down: --height; row_of[i] = height; break;
      case Step::flat: row_of[i] = height; break;
    }
    lo = std::min(lo, row_of[i]);
    hi = std::max(hi, row_of[i]);
  }
  if (steps.empty()) return "\n";
  const auto rows = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::string> grid(rows, std::string(steps.size(), ' '));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto r = static_cast<std::size_t>(hi - row_of[i]);
    grid[r][i] = steps[i] == Step::up ? '/' : steps[i] == Step::down ? '\\' : '_';
  }
  std::string out;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace permdek
