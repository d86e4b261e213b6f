#include "tricensus/pointset_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tricensus {

PointSet read_point_set(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs)) continue;  // blank or comment-only line
    if (!(ls >> ys) || (ls >> extra))
      throw std::runtime_error("point set line " + std::to_string(lineno) +
                               ": expected exactly two fields `x y`");
    try {
      pts.emplace_back(Rat::parse(xs), Rat::parse(ys));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("point set line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (pts.empty()) throw std::runtime_error("point set: no points found");
  return PointSet(std::move(pts));
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point set file: " + path);
  return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& ps, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const Point& p : ps) out << p.x.to_string() << " " << p.y.to_string() << "\n";
}

void write_point_set_file(const std::string& path, const PointSet& ps, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_point_set(out, ps, comment);
}

}  // namespace tricensus
