#pragma once

/*
 * Marching-squares contouring of the field components on a regular grid,
 * producing plottable polylines for the level sets {X = 0} and {Y = 0}.
 * Crossing points are linearly interpolated on cell edges; vertices are
 * keyed by their grid edge so segments from neighboring cells stitch
 * exactly. Cells with a corner too close to a charge are skipped and noted.
 */

#include "fieldzero/field_eval.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fieldzero {

struct ContourWindow {
    double xlo = -100, xhi = 100, ylo = -100, yhi = 100;
};

struct CurveSample {
    char component = 'X';
    std::vector<std::vector<std::pair<double, double>>> polylines;
    std::vector<std::string> notes;
};

namespace detail {

// identity of a grid edge: (ix, iy) of its lower-left node, 0 = horizontal
struct EdgeKey {
    int ix, iy, dir;
    bool operator<(const EdgeKey& o) const {
        if (ix != o.ix) return ix < o.ix;
        if (iy != o.iy) return iy < o.iy;
        return dir < o.dir;
    }
    bool operator==(const EdgeKey& o) const { return ix == o.ix && iy == o.iy && dir == o.dir; }
};

struct SegmentSoup {
    std::vector<std::pair<EdgeKey, EdgeKey>> segments;
    std::map<EdgeKey, std::pair<double, double>> vertex;
};

inline CurveSample stitch(char component, SegmentSoup& soup, std::vector<std::string> notes) {
    CurveSample out;
    out.component = component;
    out.notes = std::move(notes);

    std::map<EdgeKey, std::vector<size_t>> at_vertex;
    for (size_t i = 0; i < soup.segments.size(); ++i) {
        at_vertex[soup.segments[i].first].push_back(i);
        at_vertex[soup.segments[i].second].push_back(i);
    }
    std::vector<bool> used(soup.segments.size(), false);
    for (size_t start = 0; start < soup.segments.size(); ++start) {
        if (used[start]) continue;
        // walk both directions from the starting segment
        std::vector<EdgeKey> chain{soup.segments[start].first, soup.segments[start].second};
        used[start] = true;
        for (int dir = 0; dir < 2; ++dir) {
            for (;;) {
                EdgeKey tip = dir == 0 ? chain.back() : chain.front();
                size_t next = soup.segments.size();
                for (size_t cand : at_vertex[tip])
                    if (!used[cand]) {
                        next = cand;
                        break;
                    }
                if (next == soup.segments.size()) break;
                used[next] = true;
                EdgeKey other = soup.segments[next].first == tip ? soup.segments[next].second
                                                                 : soup.segments[next].first;
                if (dir == 0)
                    chain.push_back(other);
                else
                    chain.insert(chain.begin(), other);
            }
        }
        std::vector<std::pair<double, double>> line;
        line.reserve(chain.size());
        for (const auto& k : chain) line.push_back(soup.vertex.at(k));
        out.polylines.push_back(std::move(line));
    }
    return out;
}

}  // namespace detail

// Contour both components on a (grid_n+1)^2 node grid over the window.
inline std::pair<CurveSample, CurveSample> sample_level_sets(const ChargeSystem& sys,
                                                             const ContourWindow& win, int grid_n) {
    if (grid_n < 16) throw std::invalid_argument("contour grid must be at least 16");
    if (!(win.xlo < win.xhi) || !(win.ylo < win.yhi)) throw std::invalid_argument("empty contour window");

    const int n = grid_n;
    const double hx = (win.xhi - win.xlo) / n, hy = (win.yhi - win.ylo) / n;
    std::vector<double> X(static_cast<size_t>(n + 1) * (n + 1)), Y(X.size());
    std::vector<bool> bad(X.size(), false);
    auto idx = [n](int ix, int iy) { return static_cast<size_t>(iy) * (n + 1) + ix; };

    for (int iy = 0; iy <= n; ++iy) {
        for (int ix = 0; ix <= n; ++ix) {
            double x = win.xlo + ix * hx, y = win.ylo + iy * hy;
            bool near_charge = false;
            for (size_t j = 0; j < sys.count(); ++j) {
                double dx = x - sys.position(j).get_d();
                if (dx * dx + y * y < 1e-24) near_charge = true;
            }
            size_t k = idx(ix, iy);
            if (near_charge) {
                bad[k] = true;
                continue;
            }
            auto [vx, vy] = eval_field_double(sys, x, y);
            X[k] = vx;
            Y[k] = vy;
            if (!std::isfinite(vx) || !std::isfinite(vy)) bad[k] = true;
        }
    }

    auto contour_one = [&](const std::vector<double>& F, char name) {
        detail::SegmentSoup soup;
        int skipped = 0;
        auto vertex_on_edge = [&](int ix, int iy, int dir) {
            detail::EdgeKey key{ix, iy, dir};
            auto it = soup.vertex.find(key);
            if (it != soup.vertex.end()) return key;
            double x0 = win.xlo + ix * hx, y0 = win.ylo + iy * hy;
            double v1 = F[idx(ix, iy)];
            double v2 = dir == 0 ? F[idx(ix + 1, iy)] : F[idx(ix, iy + 1)];
            double t = v1 == v2 ? 0.5 : v1 / (v1 - v2);
            if (t < 0) t = 0;
            if (t > 1) t = 1;
            soup.vertex[key] = dir == 0 ? std::make_pair(x0 + t * hx, y0) : std::make_pair(x0, y0 + t * hy);
            return key;
        };
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) {
                size_t k00 = idx(ix, iy), k10 = idx(ix + 1, iy), k01 = idx(ix, iy + 1),
                       k11 = idx(ix + 1, iy + 1);
                if (bad[k00] || bad[k10] || bad[k01] || bad[k11]) {
                    ++skipped;
                    continue;
                }
                auto sgn = [&](size_t k) { return F[k] >= 0; };
                int pattern = (sgn(k00) ? 1 : 0) | (sgn(k10) ? 2 : 0) | (sgn(k11) ? 4 : 0) |
                              (sgn(k01) ? 8 : 0);
                if (pattern == 0 || pattern == 15) continue;
                detail::EdgeKey bottom{ix, iy, 0}, top{ix, iy + 1, 0}, left{ix, iy, 1},
                    right{ix + 1, iy, 1};
                auto add = [&](detail::EdgeKey a, detail::EdgeKey b) {
                    auto mk = [&](const detail::EdgeKey& e) { return vertex_on_edge(e.ix, e.iy, e.dir); };
                    soup.segments.emplace_back(mk(a), mk(b));
                };
                switch (pattern) {
                    case 1: case 14: add(left, bottom); break;
                    case 2: case 13: add(bottom, right); break;
                    case 3: case 12: add(left, right); break;
                    case 4: case 11: add(right, top); break;
                    case 6: case 9: add(bottom, top); break;
                    case 7: case 8: add(left, top); break;
                    case 5: case 10: {
                        // saddle: disambiguate with the center value
                        double c = 0.25 * (F[k00] + F[k10] + F[k01] + F[k11]);
                        bool center_pos = c >= 0;
                        if ((pattern == 5) == center_pos) {
                            add(left, bottom);
                            add(right, top);
                        } else {
                            add(left, top);
                            add(bottom, right);
                        }
                        break;
                    }
                    default: break;
                }
            }
        }
        std::vector<std::string> notes;
        if (skipped > 0)
            notes.push_back(std::string(1, name) + ": skipped " + std::to_string(skipped) +
                            " cells touching a charge or non-finite values");
        return detail::stitch(name, soup, std::move(notes));
    };

    return {contour_one(X, 'X'), contour_one(Y, 'Y')};
}

// CSV: polyline_id,x,y
inline void write_curve_csv(const CurveSample& cs, std::ostream& os) {
    os << "polyline_id,x,y\n";
    char buf[64];
    for (size_t i = 0; i < cs.polylines.size(); ++i) {
        for (const auto& [x, y] : cs.polylines[i]) {
            std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i, x, y);
            os << buf;
        }
    }
}

}  // namespace fieldzero
