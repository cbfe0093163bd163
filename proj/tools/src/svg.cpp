#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace ellsol::cli {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMargin = 56;

struct Window {
  double x0, x1, y0, y1;
  double px(double x) const {
    return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin);
  }
  double py(double y) const {
    return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
  }
};

Window fit(const SampleSeries& s) {
  std::vector<double> vals;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!s.pole[i] && std::isfinite(s.z[i])) vals.push_back(s.z[i]);
  }
  if (vals.empty()) throw std::runtime_error("nothing to plot: every sample is a pole");
  std::sort(vals.begin(), vals.end());
  const auto pick = [&](double q) {
    const size_t idx = static_cast<size_t>(q * static_cast<double>(vals.size() - 1));
    return vals[idx];
  };
  double lo = pick(0.02), hi = pick(0.98);
  if (hi <= lo) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.08 * (hi - lo);
  return Window{s.x.front(), s.x.back(), lo - pad, hi + pad};
}

}  // namespace

void write_svg(const std::string& path, const SampleSeries& series,
               const std::string& title) {
  const Window w = fit(series);
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot write " + path);

  std::fprintf(f,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
               "viewBox=\"0 0 %d %d\">\n",
               kWidth, kHeight, kWidth, kHeight);
  std::fprintf(f, "<rect width=\"%d\" height=\"%d\" fill=\"white\"/>\n", kWidth, kHeight);
  std::fprintf(f,
               "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"none\" "
               "stroke=\"#444\"/>\n",
               kMargin, kMargin, kWidth - 2 * kMargin, kHeight - 2 * kMargin);
  std::fprintf(f,
               "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"15\" "
               "text-anchor=\"middle\">%s</text>\n",
               kWidth / 2, kMargin - 18, title.c_str());

  // axis tick labels at the window corners, enough to read scale off the plot
  std::fprintf(f,
               "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\">%g</text>\n",
               kMargin - 6, kHeight - kMargin + 16, w.x0);
  std::fprintf(f,
               "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\" "
               "text-anchor=\"end\">%g</text>\n",
               kWidth - kMargin + 6, kHeight - kMargin + 16, w.x1);
  std::fprintf(f,
               "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\" "
               "text-anchor=\"end\">%.4g</text>\n",
               kMargin - 6, kHeight - kMargin + 4, w.y0);
  std::fprintf(f,
               "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\" "
               "text-anchor=\"end\">%.4g</text>\n",
               kMargin - 6, kMargin + 4, w.y1);

  // zero line, when visible
  if (w.y0 < 0.0 && w.y1 > 0.0) {
    std::fprintf(f,
                 "<line x1=\"%d\" y1=\"%.2f\" x2=\"%d\" y2=\"%.2f\" stroke=\"#bbb\" "
                 "stroke-dasharray=\"4 3\"/>\n",
                 kMargin, w.py(0.0), kWidth - kMargin, w.py(0.0));
  }

  bool open = false;
  for (size_t i = 0; i < series.size(); ++i) {
    const bool drawable = !series.pole[i] && std::isfinite(series.z[i]) &&
                          series.z[i] >= w.y0 && series.z[i] <= w.y1;
    if (!drawable) {
      if (open) {
        std::fprintf(f, "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n");
        open = false;
      }
      continue;
    }
    if (!open) {
      std::fprintf(f, "<polyline points=\"");
      open = true;
    }
    std::fprintf(f, "%.2f,%.2f ", w.px(series.x[i]), w.py(series.z[i]));
  }
  if (open) {
    std::fprintf(f, "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n");
  }

  std::fprintf(f, "</svg>\n");
  std::fclose(f);
}

}  // namespace ellsol::cli
