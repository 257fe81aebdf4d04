#include "contig/moore_path.hpp"

#include <algorithm>
#include <set>

namespace contig {

namespace {

void check_steps(const complex& target, const std::vector<vertex_id>& vals) {
  for (vertex_id v : vals)
    if (!target.has_vertex(v)) throw malformed_input("moore path: vertex not in target");
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    if (vals[i] == vals[i + 1]) continue;
    if (!target.has_simplex(simplex({vals[i], vals[i + 1]})))
      throw malformed_input("moore path: consecutive values must be equal or span an edge");
  }
}

}  // namespace

moore_path moore_path::raw(complex_ptr target, int start, std::vector<vertex_id> values) {
  if (!target) throw malformed_input("moore path: missing target");
  if (values.empty()) throw malformed_input("moore path: needs at least one value");
  check_steps(*target, values);
  moore_path p;
  p.target_ = std::move(target);
  p.lo_ = start;
  p.hi_ = start + static_cast<int>(values.size()) - 1;
  p.vals_ = std::move(values);
  return p;
}

moore_path moore_path::make(complex_ptr target, int start, std::vector<vertex_id> values) {
  return tighten(raw(std::move(target), start, std::move(values)));
}

bool moore_path::constant() const {
  return std::all_of(vals_.begin(), vals_.end(), [&](vertex_id v) { return v == vals_.front(); });
}

vertex_id moore_path::at(int i) const {
  if (i <= lo_) return vals_.front();
  if (i >= hi_) return vals_.back();
  return vals_[static_cast<std::size_t>(i - lo_)];
}

std::pair<vertex_id, vertex_id> moore_path::endpoints() const {
  return {vals_.front(), vals_.back()};
}

bool operator==(const moore_path& a, const moore_path& b) {
  return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.vals_ == b.vals_ && *a.target_ == *b.target_;
}

moore_path reverse(const moore_path& g) {
  std::vector<vertex_id> vals(g.values().rbegin(), g.values().rend());
  return moore_path::raw(g.target_ptr(), -g.hi(), std::move(vals));
}

moore_path normalize(const moore_path& g) {
  return moore_path::raw(g.target_ptr(), 0, g.values());
}

moore_path tighten(const moore_path& g) {
  std::vector<vertex_id> vals = g.values();
  int lo = g.lo();
  std::size_t last = vals.size();
  while (last > 1 && vals[last - 1] == vals[last - 2]) --last;
  vals.resize(last);
  std::size_t first = 0;
  while (first + 1 < vals.size() && vals[first] == vals[first + 1]) ++first;
  vals.erase(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(first));
  lo += static_cast<int>(first);
  if (vals.size() == 1) lo = 0;  // constant paths sit at [0,0]
  return moore_path::raw(g.target_ptr(), lo, std::move(vals));
}

moore_path product(const moore_path& g, const moore_path& d) {
  if (!(*g.target_ptr() == *d.target_ptr()))
    throw malformed_input("path product: different target complexes");
  if (g.endpoints().second != d.endpoints().first)
    throw malformed_input("path product: final vertex of the left path must equal the initial "
                          "vertex of the right path");
  const int lo = g.lo() + d.lo();
  const int hi = g.hi() + d.hi();
  std::vector<vertex_id> vals;
  vals.reserve(static_cast<std::size_t>(hi - lo + 1));
  const int junction = g.hi() + d.lo();
  for (int i = lo; i <= hi; ++i)
    vals.push_back(i <= junction ? g.at(i - d.lo()) : d.at(i - g.hi()));
  return moore_path::raw(g.target_ptr(), lo, std::move(vals));
}

bool paths_form_simplex(const std::vector<moore_path>& paths, int window_lo, int window_hi) {
  if (paths.empty()) throw malformed_input("paths_form_simplex: empty path set");
  if (window_lo > window_hi) throw malformed_input("paths_form_simplex: empty window");
  const complex& target = paths.front().target();
  for (const auto& p : paths) {
    if (!(p.target() == target))
      throw malformed_input("paths_form_simplex: paths must share the target");
    if (p.lo() < window_lo || p.hi() > window_hi)
      throw malformed_input("paths_form_simplex: window must contain every support");
  }
  for (int i = window_lo; i <= window_hi; ++i) {
    std::set<vertex_id> verts;
    for (const auto& p : paths) {
      verts.insert(p.at(i));
      verts.insert(p.at(i + 1));
    }
    if (!target.has_simplex(simplex::from_sorted({verts.begin(), verts.end()}))) return false;
  }
  return true;
}

}  // namespace contig
