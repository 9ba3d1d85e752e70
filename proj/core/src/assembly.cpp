#include "eqtri/assembly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eqtri/parallel.hpp"

namespace eqtri {

namespace {

const std::string kFacePrefix = "\xCF\x84:";  // "τ:"

std::vector<int> symbols_of(const std::vector<int>& facets, const CharacteristicFunction& xi) {
    std::vector<int> s;
    for (int f : facets) {
        if (f < 0 || static_cast<std::size_t>(f) >= xi.size())
            throw std::invalid_argument("facet index " + std::to_string(f) + " has no characteristic symbol");
        s.push_back(xi[static_cast<std::size_t>(f)]);
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::size_t pow3(int e) {
    std::size_t p = 1;
    for (int i = 0; i < e; ++i) p *= 3;
    return p;
}

}  // namespace

std::vector<CubicalCell> cubical_subdivision(const SimplePolytope& Q) {
    std::vector<CubicalCell> cells;
    for (auto& f : face_lattice(Q)) {
        CubicalCell c;
        const auto& S = f.facets;
        for (unsigned mask = 0; mask < (1u << S.size()); ++mask) {
            std::vector<int> corner;
            for (std::size_t i = 0; i < S.size(); ++i)
                if (mask & (1u << i)) corner.push_back(S[i]);
            c.corners.push_back(std::move(corner));
        }
        std::sort(c.corners.begin(), c.corners.end());
        c.base = std::move(f);
        cells.push_back(std::move(c));
    }
    return cells;
}

bool is_cell_face(const CubicalCell& inner, const CubicalCell& outer) {
    const auto& a = inner.base.facets;
    const auto& b = outer.base.facets;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FactorSpec block_spec_for_face(const SimplePolytope& Q, const CharacteristicFunction& xi, const Face& sigma) {
    FactorSpec spec;
    spec.kinds.assign(static_cast<std::size_t>(Q.n), FactorKind::circle);
    auto syms = symbols_of(sigma.facets, xi);
    if (std::adjacent_find(syms.begin(), syms.end()) != syms.end())
        throw std::invalid_argument("characteristic function repeats a symbol on a face");
    bool zero = false;
    for (int s : syms) {
        if (s < 0 || s > Q.n) throw std::invalid_argument("characteristic symbol out of range");
        if (s == 0) zero = true;
        else spec.kinds[static_cast<std::size_t>(s - 1)] = FactorKind::coned_own;
    }
    if (zero) {
        auto it = std::find(spec.kinds.begin(), spec.kinds.end(), FactorKind::circle);
        if (it == spec.kinds.end()) throw std::invalid_argument("face carries all n+1 symbols");
        *it = FactorKind::coned_zero;
    }
    return spec;
}

std::string GlobalVertexLabel::render() const {
    std::string s = kFacePrefix;
    for (std::size_t i = 0; i < facets.size(); ++i) s += (i ? "," : "") + std::to_string(facets[i]);
    s += "|t:";
    for (int r : residue) s.push_back(static_cast<char>('0' + r));
    return s;
}

GlobalVertexLabel GlobalVertexLabel::parse(const std::string& label) {
    auto bad = [&] { return std::invalid_argument("label '" + label + "' is not a face/residue label"); };
    if (label.compare(0, kFacePrefix.size(), kFacePrefix) != 0) throw bad();
    auto bar = label.find("|t:", kFacePrefix.size());
    if (bar == std::string::npos) throw bad();
    GlobalVertexLabel g;
    std::string facets = label.substr(kFacePrefix.size(), bar - kFacePrefix.size());
    std::size_t pos = 0;
    while (pos < facets.size()) {
        auto comma = facets.find(',', pos);
        auto tok = facets.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) throw bad();
        g.facets.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == facets.size()) throw bad();
    }
    if (!std::is_sorted(g.facets.begin(), g.facets.end()) ||
        std::adjacent_find(g.facets.begin(), g.facets.end()) != g.facets.end())
        throw bad();
    for (std::size_t i = bar + 3; i < label.size(); ++i) {
        char c = label[i];
        if (c < '0' || c > '2') throw bad();
        g.residue.push_back(c - '0');
    }
    return g;
}

QuotientBasis QuotientBasis::of(const std::vector<int>& symbols, int n) {
    QuotientBasis b;
    b.n = n;
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    bool zero = false;
    for (int s : symbols) {
        if (s < 0 || s > n) throw std::invalid_argument("characteristic symbol out of range");
        if (s == 0) zero = true;
        else gone[static_cast<std::size_t>(s - 1)] = 1;
    }
    if (zero) {
        for (int i = 0; i < n; ++i)
            if (!gone[static_cast<std::size_t>(i)]) {
                b.host = i;
                gone[static_cast<std::size_t>(i)] = 1;
                break;
            }
        if (b.host < 0) throw std::invalid_argument("symbols span the whole lattice");
    }
    for (int i = 0; i < n; ++i)
        if (!gone[static_cast<std::size_t>(i)]) b.kept.push_back(i);
    return b;
}

std::vector<int> QuotientBasis::reduce(const std::vector<int>& x) const {
    const int c = host >= 0 ? x[static_cast<std::size_t>(host)] : 0;
    std::vector<int> t;
    t.reserve(kept.size());
    for (int i : kept) t.push_back(((x[static_cast<std::size_t>(i)] - c) % 3 + 3) % 3);
    return t;
}

std::vector<int> QuotientBasis::lift(const std::vector<int>& t) const {
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) x[static_cast<std::size_t>(kept[i])] = t[i];
    return x;
}

unsigned long long vertex_count_formula(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("dimension out of range for the vertex count");
    unsigned long long p4 = 1;
    for (int i = 0; i <= n; ++i) p4 *= 4;
    const unsigned long long closed = (p4 - 1) / 3;
    unsigned long long sum = 0, binom = static_cast<unsigned long long>(n) + 1, p3 = 1;
    for (int k = 0; k <= n; ++k) {
        sum += binom * p3;  // C(n+1, k+1) 3^k
        binom = binom * static_cast<unsigned long long>(n - k) / static_cast<unsigned long long>(k + 2);
        p3 *= 3;
    }
    if (sum != closed) throw std::logic_error("vertex count identity fails");
    return closed;
}

GroupAction global_action(const SimplicialComplex& K, const CharacteristicFunction& xi, int n) {
    std::map<std::vector<int>, QuotientBasis> bases;
    std::vector<std::string> points = K.labels();
    std::vector<std::vector<std::uint32_t>> gens(static_cast<std::size_t>(n), std::vector<std::uint32_t>(points.size()));
    for (Vertex v = 0; v < K.vertex_count(); ++v) {
        auto g = GlobalVertexLabel::parse(K.label(v));
        auto it = bases.find(g.facets);
        if (it == bases.end()) it = bases.emplace(g.facets, QuotientBasis::of(symbols_of(g.facets, xi), n)).first;
        const auto& b = it->second;
        if (g.residue.size() != b.kept.size())
            throw std::invalid_argument("label '" + K.label(v) + "' has the wrong residue length");
        auto x = b.lift(g.residue);
        for (int i = 0; i < n; ++i) {
            auto y = x;
            y[static_cast<std::size_t>(i)] = (y[static_cast<std::size_t>(i)] + 1) % 3;
            GlobalVertexLabel h{g.facets, b.reduce(y)};
            auto w = K.find(h.render());
            if (!w) throw std::invalid_argument("translation leaves the vertex set at '" + K.label(v) + "'");
            gens[static_cast<std::size_t>(i)][v] = *w;
        }
    }
    return make_action(std::move(points), std::move(gens));
}

std::string block_to_global_label(const CharacteristicFunction& xi, const Face& sigma, const FactorSpec& spec,
                                  const std::vector<int>& v) {
    const int n = spec.n();
    int zero = -1;
    for (int j = 0; j < n; ++j)
        if (spec.kinds[static_cast<std::size_t>(j)] == FactorKind::coned_zero) zero = j;
    GlobalVertexLabel g;
    for (int f : sigma.facets) {
        int s = xi[static_cast<std::size_t>(f)];
        int factor = s == 0 ? zero : s - 1;
        if (v[static_cast<std::size_t>(factor)] == kApex) g.facets.push_back(f);
    }
    std::vector<int> y(v);
    for (auto& c : y)
        if (c == kApex) c = 0;
    std::vector<int> x = y;
    if (zero >= 0) {
        // the diagonal factor runs against the coordinate axes
        const int d = y[static_cast<std::size_t>(zero)];
        for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = (y[static_cast<std::size_t>(j)] - d + 3) % 3;
        x[static_cast<std::size_t>(zero)] = (3 - d) % 3;
    }
    g.residue = QuotientBasis::of(symbols_of(g.facets, xi), n).reduce(x);
    return g.render();
}

namespace {

// Vertices are numbered face by face: id = offset[face] + packed residue.
struct Registry {
    int n = 0;
    std::vector<Face> faces;
    std::map<std::vector<int>, std::size_t> index;
    std::vector<QuotientBasis> basis;
    std::vector<std::size_t> offset;
    std::vector<std::size_t> face_of;

    Vertex id(std::size_t f, const std::vector<int>& t) const {
        std::size_t p = 0;
        for (int r : t) p = p * 3 + static_cast<std::size_t>(r);
        return static_cast<Vertex>(offset[f] + p);
    }
    std::vector<int> residue(Vertex v) const {
        const std::size_t f = face_of[v];
        std::size_t p = v - offset[f];
        std::vector<int> t(basis[f].kept.size());
        for (std::size_t i = t.size(); i-- > 0;) {
            t[i] = static_cast<int>(p % 3);
            p /= 3;
        }
        return t;
    }
    Vertex project(Vertex v, std::size_t target) const {
        return id(target, basis[target].reduce(basis[face_of[v]].lift(residue(v))));
    }
    std::string label(Vertex v) const { return GlobalVertexLabel{faces[face_of[v]].facets, residue(v)}.render(); }
};

// Vertices sorted by face (coarsest first), then along the monotone chain of
// the quotient torus within each face.
std::vector<Vertex> chain_order(const Registry& R, const Simplex& s) {
    std::vector<std::size_t> levels;
    for (Vertex v : s) levels.push_back(R.face_of[v]);
    std::sort(levels.begin(), levels.end(), [&](std::size_t a, std::size_t b) {
        return R.faces[a].codim() != R.faces[b].codim() ? R.faces[a].codim() < R.faces[b].codim() : a < b;
    });
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<Vertex> out;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const auto f = levels[li];
        if (li) {
            const auto& lo = R.faces[levels[li - 1]].facets;
            const auto& hi = R.faces[f].facets;
            if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()))
                throw ConstructionError("simplex meets two unrelated faces");
        }
        std::vector<Vertex> group;
        for (Vertex v : s)
            if (R.face_of[v] == f) group.push_back(v);
        std::vector<std::vector<int>> res;
        for (Vertex v : group) res.push_back(R.residue(v));
        bool placed = false;
        for (std::size_t w = 0; w < group.size() && !placed; ++w) {
            std::vector<std::pair<int, Vertex>> keyed;
            bool ok = true;
            for (std::size_t o = 0; o < group.size() && ok; ++o) {
                int ones = 0;
                for (std::size_t i = 0; i < res[o].size(); ++i) {
                    int d = (res[o][i] - res[w][i] + 3) % 3;
                    if (d == 2) ok = false;
                    ones += d;
                }
                keyed.emplace_back(ones, group[o]);
            }
            if (!ok) continue;
            std::sort(keyed.begin(), keyed.end());
            for (const auto& [k, v] : keyed) out.push_back(v);
            placed = true;
        }
        if (!placed) throw ConstructionError("vertices over one face do not form a monotone chain");
    }
    return out;
}

// Mapping cylinder of the projection onto the face: for a chain a_0 < ... < a_k
// the prism facets {a_0..a_i} + p{a_i..a_k}.
std::vector<Simplex> cylinder(const Registry& R, const std::vector<Simplex>& base, std::size_t target) {
    std::vector<Simplex> out;
    for (const auto& f : base) {
        auto o = chain_order(R, f);
        std::vector<Vertex> p;
        for (Vertex v : o) p.push_back(R.project(v, target));
        for (std::size_t i = 0; i < o.size(); ++i) {
            Simplex s(o.begin(), o.begin() + static_cast<long>(i) + 1);
            s.insert(s.end(), p.begin() + static_cast<long>(i), p.end());
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            out.push_back(std::move(s));
        }
    }
    std::size_t top = 0;
    for (const auto& s : out) top = std::max(top, s.size());
    out.erase(std::remove_if(out.begin(), out.end(), [&](const Simplex& s) { return s.size() != top; }), out.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Simplex> torus_facets(const Registry& R) {
    const int n = R.n;
    std::vector<Simplex> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < pow3(n); ++p) {
        std::vector<int> x(static_cast<std::size_t>(n));
        std::size_t q = p;
        for (int i = n - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = static_cast<int>(q % 3);
            q /= 3;
        }
        std::iota(perm.begin(), perm.end(), 0);
        do {
            auto y = x;
            Simplex s{R.id(0, y)};
            for (int j : perm) {
                y[static_cast<std::size_t>(j)] = (y[static_cast<std::size_t>(j)] + 1) % 3;
                s.push_back(R.id(0, y));
            }
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool nested(const std::vector<Simplex>& small, const std::vector<Simplex>& big) {
    SimplexSet faces;
    for (const auto& f : big)
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Simplex s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) s.push_back(f[i]);
            faces.insert(std::move(s));
        }
    return std::all_of(small.begin(), small.end(), [&](const Simplex& s) { return faces.count(s) > 0; });
}

}  // namespace

AssembledComplex assemble_toric(const SimplePolytope& Q, const CharacteristicFunction& xi, int max_n) {
    const int n = Q.n;
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (n > max_n)
        throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n));
    if (!validate_characteristic(Q, xi)) throw std::invalid_argument("characteristic function is not standard");

    Registry R;
    R.n = n;
    R.faces = face_lattice(Q);
    for (std::size_t f = 0; f < R.faces.size(); ++f) {
        R.index[R.faces[f].facets] = f;
        R.basis.push_back(QuotientBasis::of(symbols_of(R.faces[f].facets, xi), n));
        const std::size_t count = pow3(n - R.faces[f].codim());
        R.offset.push_back(R.face_of.size());
        R.face_of.insert(R.face_of.end(), count, f);
    }
    const std::size_t F = R.faces.size();

    std::vector<std::vector<Simplex>> blocks(F);
    blocks[0] = torus_facets(R);  // faces are sorted by codimension; face 0 is Q
    for (int c = 1; c <= n; ++c) {
        std::vector<std::size_t> level;
        for (std::size_t f = 0; f < F; ++f)
            if (R.faces[f].codim() == c) level.push_back(f);
        parallel_for(level.size(), [&](std::size_t li) {
            const std::size_t f = level[li];
            const auto& S = R.faces[f].facets;
            std::vector<Simplex> base;
            for (std::size_t drop = 0; drop < S.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < S.size(); ++i)
                    if (i != drop) sub.push_back(S[i]);
                const auto& b = blocks[R.index.at(sub)];
                base.insert(base.end(), b.begin(), b.end());
            }
            std::sort(base.begin(), base.end());
            base.erase(std::unique(base.begin(), base.end()), base.end());
            blocks[f] = cylinder(R, base, f);
        });
    }

    // nesting of blocks along every codimension-one step
    for (std::size_t f = 1; f < F; ++f) {
        const auto& S = R.faces[f].facets;
        for (std::size_t drop = 0; drop < S.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < S.size(); ++i)
                if (i != drop) sub.push_back(S[i]);
            if (!nested(blocks[R.index.at(sub)], blocks[f]))
                throw ConstructionError("block of face " + GlobalVertexLabel{sub, {}}.render() +
                                        " is not a subcomplex of the block of " + GlobalVertexLabel{S, {}}.render());
        }
    }

    std::vector<Simplex> top;
    for (std::size_t f = 0; f < F; ++f)
        if (R.faces[f].codim() == n) top.insert(top.end(), blocks[f].begin(), blocks[f].end());

    // renumber by label order
    const std::size_t V = R.face_of.size();
    std::vector<std::string> labels(V);
    for (Vertex v = 0; v < V; ++v) labels[v] = R.label(v);
    std::vector<Vertex> order(V);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return labels[a] < labels[b]; });
    std::vector<Vertex> rank(V);
    std::vector<std::string> sorted_labels(V);
    std::vector<std::size_t> face_by_rank(V);
    for (Vertex i = 0; i < V; ++i) {
        rank[order[i]] = i;
        sorted_labels[i] = labels[order[i]];
        face_by_rank[i] = R.face_of[order[i]];
    }
    auto renumber = [&](std::vector<Simplex>& fs) {
        for (auto& s : fs) {
            for (auto& v : s) v = rank[v];
            std::sort(s.begin(), s.end());
        }
        std::sort(fs.begin(), fs.end());
    };
    renumber(top);
    for (auto& b : blocks) renumber(b);

    AssembledComplex A;
    A.complex = SimplicialComplex::from_indexed(sorted_labels, top);
    if (A.complex.vertex_count() != V)
        throw ConstructionError("assembled complex uses " + std::to_string(A.complex.vertex_count()) +
                                " vertices, expected " + std::to_string(V));
    A.polytope = Q;
    A.xi = xi;
    A.faces = R.faces;
    A.blocks = std::move(blocks);

    std::vector<std::size_t> per_face(F, 0);
    for (Vertex v = 0; v < V; ++v) ++per_face[face_by_rank[v]];
    for (std::size_t f = 0; f < F; ++f)
        if (per_face[f] != pow3(n - R.faces[f].codim()))
            throw ConstructionError("face " + GlobalVertexLabel{R.faces[f].facets, {}}.render() + " carries " +
                                    std::to_string(per_face[f]) + " vertices");

    for (const auto& s : A.complex.facets()) {
        std::size_t cell = F;
        for (Vertex v : s)
            if (R.faces[face_by_rank[v]].codim() == n) cell = face_by_rank[v];
        if (cell == F) throw ConstructionError("facet outside every vertex cell");
        A.facet_cell.push_back(cell);
    }

    A.action = global_action(A.complex, xi, n);
    if (!is_equivariant(A.complex, A.action)) throw ConstructionError("assembled complex is not equivariant");

    // compare with the product blocks
    A.matches_product_block.assign(F, 0);
    for (std::size_t f = 0; f < F; ++f) {
        auto spec = block_spec_for_face(Q, xi, R.faces[f]);
        auto product = build_block(spec, n);
        std::vector<Simplex> mapped;
        bool ok = true;
        for (const auto& s : product.facets()) {
            Simplex t;
            for (Vertex v : s) {
                auto w = A.complex.find(block_to_global_label(xi, R.faces[f], spec, parse_block_label(product.label(v))));
                if (!w) {
                    ok = false;
                    break;
                }
                t.push_back(*w);
            }
            if (!ok) break;
            std::sort(t.begin(), t.end());
            mapped.push_back(std::move(t));
        }
        std::sort(mapped.begin(), mapped.end());
        A.matches_product_block[f] = ok && mapped == A.blocks[f] ? 1 : 0;
        if (!A.matches_product_block[f] && !spec.has_zero())
            throw ConstructionError("block of face " + GlobalVertexLabel{R.faces[f].facets, {}}.render() +
                                    " differs from the product block " + to_string(spec));
    }
    return A;
}

AssembledComplex assemble_cpn(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (n > max_n)
        throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n));
    CharacteristicFunction xi(static_cast<std::size_t>(n) + 1);
    std::iota(xi.begin(), xi.end(), 0);
    return assemble_toric(simplex_polytope(n), xi, max_n);
}

}  // namespace eqtri
