#include <cstdio>
#include <fstream>
#include <sstream>

#include "twistor/errors.hpp"
#include "twistor/locus.hpp"

namespace twistor::locus {

namespace {

constexpr double kSize = 640;

struct Segment {
  double x0, y0, x1, y1;
};

// Marching squares over a (res+1)^2 grid of samples of g.
template <class G>
std::vector<Segment> contour(const Window& w, int res, G g) {
  const double dx = (w.xmax - w.xmin) / res, dy = (w.ymax - w.ymin) / res;
  std::vector<double> v((res + 1) * (res + 1));
  for (int j = 0; j <= res; ++j)
    for (int i = 0; i <= res; ++i) v[j * (res + 1) + i] = static_cast<double>(g(w.xmin + i * dx, w.ymin + j * dy));
  auto at = [&](int i, int j) { return v[j * (res + 1) + i]; };
  std::vector<Segment> segs;
  for (int j = 0; j < res; ++j)
    for (int i = 0; i < res; ++i) {
      double x = w.xmin + i * dx, y = w.ymin + j * dy;
      // corners: 0 (x,y), 1 (x+dx,y), 2 (x+dx,y+dy), 3 (x,y+dy)
      double c[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      double px[4] = {x, x + dx, x + dx, x}, py[4] = {y, y, y + dy, y + dy};
      int mask = 0;
      for (int k = 0; k < 4; ++k)
        if (c[k] > 0) mask |= 1 << k;
      if (mask == 0 || mask == 15) continue;
      // crossing point on edge k (between corner k and k+1)
      auto edge = [&](int k) {
        int a = k, b = (k + 1) % 4;
        double t = c[a] / (c[a] - c[b]);
        return std::pair<double, double>{px[a] + t * (px[b] - px[a]), py[a] + t * (py[b] - py[a])};
      };
      std::vector<int> cut;
      for (int k = 0; k < 4; ++k)
        if (((mask >> k) & 1) != ((mask >> ((k + 1) % 4)) & 1)) cut.push_back(k);
      // two crossings normally, four at a saddle; pair them in order
      for (size_t s = 0; s + 1 < cut.size(); s += 2) {
        auto p = edge(cut[s]), q = edge(cut[s + 1]);
        segs.push_back({p.first, p.second, q.first, q.second});
      }
    }
  return segs;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string plot_svg(int n, const Window& w, int resolution, PlotSummary* summary) {
  if (resolution < 64) fail(ErrorKind::InvalidArgument, "resolution must be at least 64");
  if (!(w.xmax > w.xmin) || !(w.ymax > w.ymin)) fail(ErrorKind::InvalidArgument, "empty plot window");
  auto sx = [&](double x) { return (x - w.xmin) / (w.xmax - w.xmin) * kSize; };
  auto sy = [&](double y) { return kSize - (y - w.ymin) / (w.ymax - w.ymin) * kSize; };

  auto fseg = contour(w, resolution, [&](double x, double y) { return eval_f(n, LD(x), LD(y)); });
  auto tseg = contour(w, resolution, [&](double x, double y) { return eval_tau(n, LD(x), LD(y)); });

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
     << "<title>f_" << n << " = 0 and tau_" << n << " = 0 on [" << w.xmin << "," << w.xmax << "]x[" << w.ymin << ","
     << w.ymax << "]</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto group = [&](const char* cls, const char* colour, const std::vector<Segment>& segs) {
    os << "<g class=\"" << cls << "\" stroke=\"" << colour << "\" stroke-width=\"1.5\" fill=\"none\">";
    if (!segs.empty()) {
      os << "\n<path d=\"";
      for (auto& s : segs) os << "M" << fmt(sx(s.x0)) << " " << fmt(sy(s.y0)) << "L" << fmt(sx(s.x1)) << " " << fmt(sy(s.y1));
      os << "\"/>\n";
    }
    os << "</g>\n";
  };
  group("curve-f", "#1f77b4", fseg);
  group("curve-tau", "#ff7f0e", tseg);
  int markers = 0;
  os << "<g class=\"markers\" fill=\"black\">\n";
  for (auto& r : nonacyclic_roots(n)) {
    double x = static_cast<double>(r.x);
    if (x < w.xmin || x > w.xmax || x < w.ymin || x > w.ymax) continue;
    os << "<circle class=\"nonacyclic\" cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(x)) << "\" r=\"4\"/>\n";
    ++markers;
  }
  os << "</g>\n</svg>\n";
  if (summary) *summary = {static_cast<int>(fseg.size()), static_cast<int>(tseg.size()), markers};
  return os.str();
}

PlotSummary plot_curves(int n, const Window& w, int resolution, const std::string& path) {
  PlotSummary s;
  std::string svg = plot_svg(n, w, resolution, &s);
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << svg;
  out.close();
  if (!out) fail(ErrorKind::IoError, "write to " + path + " failed");
  return s;
}

}  // namespace twistor::locus
