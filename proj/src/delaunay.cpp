#include "phyllo/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "phyllo/predicates.hpp"

namespace phyllo {

using predicates::incircle;
using predicates::orient2d;
using predicates::orient3d;

std::vector<int> Triangulation::faces_around(int v) const {
    std::vector<int> ring;
    const int start = vertex_face[static_cast<std::size_t>(v)];
    int f = start;
    do {
        ring.push_back(f);
        const auto& tri = faces[static_cast<std::size_t>(f)];
        const int i = tri[0] == v ? 0 : (tri[1] == v ? 1 : 2);
        f = adjacent[static_cast<std::size_t>(f)][static_cast<std::size_t>((i + 1) % 3)];
        if (ring.size() > faces.size()) throw std::logic_error("faces_around: broken adjacency");
    } while (f != start);
    return ring;
}

std::vector<std::array<int, 3>> Triangulation::finite_faces() const {
    std::vector<std::array<int, 3>> out;
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (!is_ghost(static_cast<int>(f))) out.push_back(faces[f]);
    return out;
}

namespace {

class Mesh {
public:
    std::vector<std::array<int, 3>> v;
    std::vector<std::array<int, 3>> adj;
    std::vector<char> alive;
    int last = 0;

    int add(int a, int b, int c) {
        int f;
        if (!free_.empty()) {
            f = free_.back();
            free_.pop_back();
            v[static_cast<std::size_t>(f)] = {a, b, c};
            adj[static_cast<std::size_t>(f)] = {-1, -1, -1};
            alive[static_cast<std::size_t>(f)] = 1;
        } else {
            f = static_cast<int>(v.size());
            v.push_back({a, b, c});
            adj.push_back({-1, -1, -1});
            alive.push_back(1);
            visit_.push_back(0);
        }
        return f;
    }

    // Sets adjacency between all faces sharing an edge (initial simplex only).
    void link_all() {
        std::map<std::pair<int, int>, std::pair<int, int>> open;
        for (std::size_t f = 0; f < v.size(); ++f) {
            if (!alive[f]) continue;
            for (int i = 0; i < 3; ++i) {
                const int a = v[f][static_cast<std::size_t>((i + 1) % 3)];
                const int b = v[f][static_cast<std::size_t>((i + 2) % 3)];
                auto it = open.find({b, a});
                if (it != open.end()) {
                    adj[f][static_cast<std::size_t>(i)] = it->second.first;
                    adj[static_cast<std::size_t>(it->second.first)][static_cast<std::size_t>(it->second.second)] =
                        static_cast<int>(f);
                    open.erase(it);
                } else {
                    open[{a, b}] = {static_cast<int>(f), i};
                }
            }
        }
        if (!open.empty()) throw std::logic_error("initial simplex is not closed");
    }

    bool ghost(int f) const {
        const auto& t = v[static_cast<std::size_t>(f)];
        return t[0] < 0 || t[1] < 0 || t[2] < 0;
    }

    // Replaces every face in conflict with point p (found by flood fill from
    // `seed`) by the fan joining p to the cavity boundary.
    template <class Conflict>
    void insert(int p, int seed, Conflict&& conflict) {
        ++stamp_;
        cavity_.clear();
        std::vector<int> stack{seed};
        visit_[static_cast<std::size_t>(seed)] = stamp_;
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            cavity_.push_back(f);
            for (int nb : adj[static_cast<std::size_t>(f)]) {
                if (visit_[static_cast<std::size_t>(nb)] >= stamp_) continue;
                if (conflict(nb)) {
                    visit_[static_cast<std::size_t>(nb)] = stamp_;
                    stack.push_back(nb);
                } else {
                    visit_[static_cast<std::size_t>(nb)] = stamp_ + 1;
                }
            }
        }
        // stamps alternate between "in cavity" (stamp_) and "tested, outside" (stamp_ + 1)
        first_.clear();
        second_.clear();
        created_.clear();
        for (int f : cavity_) {
            for (int i = 0; i < 3; ++i) {
                const int nb = adj[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)];
                if (visit_[static_cast<std::size_t>(nb)] == stamp_) continue;
                const int a = v[static_cast<std::size_t>(f)][static_cast<std::size_t>((i + 1) % 3)];
                const int b = v[static_cast<std::size_t>(f)][static_cast<std::size_t>((i + 2) % 3)];
                const int nf = add(a, b, p);
                visit_[static_cast<std::size_t>(nf)] = stamp_ + 1;
                adj[static_cast<std::size_t>(nf)][2] = nb;
                auto& back = adj[static_cast<std::size_t>(nb)];
                for (int k = 0; k < 3; ++k)
                    if (back[static_cast<std::size_t>(k)] == f) back[static_cast<std::size_t>(k)] = nf;
                first_[a] = nf;
                second_[b] = nf;
                created_.push_back(nf);
            }
        }
        for (int nf : created_) {
            const auto& t = v[static_cast<std::size_t>(nf)];
            adj[static_cast<std::size_t>(nf)][0] = first_.at(t[1]);
            adj[static_cast<std::size_t>(nf)][1] = second_.at(t[0]);
        }
        for (int f : cavity_) {
            alive[static_cast<std::size_t>(f)] = 0;
            free_.push_back(f);
        }
        last = created_.front();
        ++stamp_;
    }

    Triangulation finish(std::size_t nvertices) const {
        Triangulation t;
        std::vector<int> remap(v.size(), -1);
        for (std::size_t f = 0; f < v.size(); ++f) {
            if (!alive[f]) continue;
            remap[f] = static_cast<int>(t.faces.size());
            t.faces.push_back(v[f]);
        }
        t.adjacent.resize(t.faces.size());
        t.vertex_face.assign(nvertices, -1);
        for (std::size_t f = 0; f < v.size(); ++f) {
            if (!alive[f]) continue;
            const auto nf = static_cast<std::size_t>(remap[f]);
            for (int i = 0; i < 3; ++i) {
                t.adjacent[nf][static_cast<std::size_t>(i)] = remap[static_cast<std::size_t>(adj[f][static_cast<std::size_t>(i)])];
                const int vert = v[f][static_cast<std::size_t>(i)];
                if (vert >= 0) t.vertex_face[static_cast<std::size_t>(vert)] = static_cast<int>(nf);
            }
        }
        return t;
    }

private:
    std::vector<int> free_;
    std::vector<unsigned> visit_;
    unsigned stamp_ = 1;
    std::vector<int> cavity_;
    std::vector<int> created_;
    std::unordered_map<int, int> first_;
    std::unordered_map<int, int> second_;
};

template <class P, class Less>
void reject_duplicates(std::span<const P> points, Less less) {
    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& a = points[static_cast<std::size_t>(i)];
        const auto& b = points[static_cast<std::size_t>(j)];
        if (less(a, b)) return true;
        if (less(b, a)) return false;
        return i < j;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto& a = points[static_cast<std::size_t>(order[k - 1])];
        const auto& b = points[static_cast<std::size_t>(order[k])];
        if (!less(a, b) && !less(b, a)) throw DuplicateSitesError(order[k - 1], order[k]);
    }
}

}  // namespace

Triangulation delaunay_2d(std::span<const Vec2> points) {
    const std::size_t n = points.size();
    if (n < 3) throw DegenerateInputError("delaunay_2d: at least 3 sites are required");
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y))
            throw DegenerateInputError("delaunay_2d: site " + std::to_string(i) + " has non-finite coordinates");
    reject_duplicates(points, [](const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });

    const auto P = [&](int i) { return points[static_cast<std::size_t>(i)]; };
    std::size_t third = 2;
    while (third < n && orient2d(P(0), P(1), P(static_cast<int>(third))) == 0) ++third;
    if (third == n) throw DegenerateInputError("delaunay_2d: all sites are collinear");

    Mesh mesh;
    int a = 0, b = 1, c = static_cast<int>(third);
    if (orient2d(P(a), P(b), P(c)) < 0) std::swap(b, c);
    mesh.add(a, b, c);
    mesh.add(b, a, Triangulation::infinite);
    mesh.add(c, b, Triangulation::infinite);
    mesh.add(a, c, Triangulation::infinite);
    mesh.link_all();
    mesh.last = 0;

    std::vector<int> order;
    order.reserve(n);
    for (std::size_t i = 2; i < n; ++i)
        if (i != third) order.push_back(static_cast<int>(i));

    for (int p : order) {
        const Vec2 q = P(p);
        auto conflict = [&](int f) {
            const auto& t = mesh.v[static_cast<std::size_t>(f)];
            int k = -1;
            for (int i = 0; i < 3; ++i)
                if (t[static_cast<std::size_t>(i)] < 0) k = i;
            if (k < 0) return incircle(P(t[0]), P(t[1]), P(t[2]), q) > 0;
            // ghost: the hull edge x -> y has the outside on its left
            const Vec2 x = P(t[static_cast<std::size_t>((k + 1) % 3)]);
            const Vec2 y = P(t[static_cast<std::size_t>((k + 2) % 3)]);
            const int o = orient2d(x, y, q);
            if (o != 0) return o > 0;
            return dot(q - x, y - x) > 0 && dot(q - y, x - y) > 0;
        };

        // visibility walk toward q
        int f = mesh.last;
        if (!mesh.alive[static_cast<std::size_t>(f)]) f = 0;
        int seed = -1;
        for (std::size_t steps = 0; steps < 4 * mesh.v.size() + 16; ++steps) {
            if (!mesh.alive[static_cast<std::size_t>(f)]) break;
            if (mesh.ghost(f)) {
                if (conflict(f)) {
                    seed = f;
                    break;
                }
                const auto& t = mesh.v[static_cast<std::size_t>(f)];
                const int k = t[0] < 0 ? 0 : (t[1] < 0 ? 1 : 2);
                f = mesh.adj[static_cast<std::size_t>(f)][static_cast<std::size_t>(k)];
                continue;
            }
            const auto& t = mesh.v[static_cast<std::size_t>(f)];
            bool moved = false;
            for (int i = 0; i < 3; ++i) {
                const Vec2 x = P(t[static_cast<std::size_t>((i + 1) % 3)]);
                const Vec2 y = P(t[static_cast<std::size_t>((i + 2) % 3)]);
                if (orient2d(x, y, q) < 0) {
                    f = mesh.adj[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)];
                    moved = true;
                    break;
                }
            }
            if (!moved) {
                if (conflict(f)) seed = f;
                break;
            }
        }
        if (seed < 0) {
            for (std::size_t g = 0; g < mesh.v.size() && seed < 0; ++g)
                if (mesh.alive[g] && conflict(static_cast<int>(g))) seed = static_cast<int>(g);
        }
        if (seed < 0) throw std::logic_error("delaunay_2d: no conflicting face for site " + std::to_string(p));
        mesh.insert(p, seed, conflict);
    }
    return mesh.finish(n);
}

Triangulation sphere_hull(std::span<const Vec3> points) {
    const std::size_t n = points.size();
    if (n < 4) throw DegenerateInputError("sphere_hull: fewer than 4 non-coplanar points");
    reject_duplicates(points, [](const Vec3& a, const Vec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    });
    const auto P = [&](int i) { return points[static_cast<std::size_t>(i)]; };

    // first three points that are not collinear, then one off their plane
    std::size_t i2 = 2;
    while (i2 < n && norm(cross(P(1) - P(0), P(static_cast<int>(i2)) - P(0))) == 0) ++i2;
    std::size_t i3 = i2 + 1;
    while (i3 < n && orient3d(P(0), P(1), P(static_cast<int>(i2)), P(static_cast<int>(i3))) == 0) ++i3;
    if (i2 >= n || i3 >= n) throw DegenerateInputError("sphere_hull: fewer than 4 non-coplanar points");

    Mesh mesh;
    const int q[4] = {0, 1, static_cast<int>(i2), static_cast<int>(i3)};
    const int faces[4][4] = {{0, 1, 2, 3}, {0, 3, 1, 2}, {1, 3, 2, 0}, {2, 3, 0, 1}};
    for (const auto& fc : faces) {
        int x = q[fc[0]], y = q[fc[1]], z = q[fc[2]];
        if (orient3d(P(x), P(y), P(z), P(q[fc[3]])) > 0) std::swap(y, z);
        mesh.add(x, y, z);
    }
    mesh.link_all();
    mesh.last = 0;

    std::vector<int> queue;
    std::vector<unsigned> seen;
    unsigned stamp = 0;
    for (std::size_t i = 2; i < n; ++i) {
        if (i == i2 || i == i3) continue;
        const int p = static_cast<int>(i);
        const Vec3 r = P(p);
        auto conflict = [&](int f) {
            const auto& t = mesh.v[static_cast<std::size_t>(f)];
            return orient3d(P(t[0]), P(t[1]), P(t[2]), r) > 0;
        };
        // breadth-first search from the faces created last
        seen.resize(mesh.v.size(), 0);
        ++stamp;
        queue.assign(1, mesh.last);
        seen[static_cast<std::size_t>(mesh.last)] = stamp;
        int seed = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int f = queue[head];
            if (conflict(f)) {
                seed = f;
                break;
            }
            for (int nb : mesh.adj[static_cast<std::size_t>(f)]) {
                if (seen[static_cast<std::size_t>(nb)] == stamp) continue;
                seen[static_cast<std::size_t>(nb)] = stamp;
                queue.push_back(nb);
            }
        }
        if (seed < 0)
            throw DegenerateInputError("sphere_hull: site " + std::to_string(p) + " is not on the convex hull");
        mesh.insert(p, seed, conflict);
    }
    return mesh.finish(n);
}

}  // namespace phyllo
