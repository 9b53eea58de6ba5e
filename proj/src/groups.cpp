#include "groups.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

namespace fca {

int FiniteGroupModel::inverse(int a) const {
    for (int b = 0; b < order(); ++b) {
        if (table[a][b] == identity) return b;
    }
    fail(ErrorKind::internal, "element '" + labels[a] + "' has no inverse");
}

int FiniteGroupModel::index_of(const std::string& label) const {
    for (int i = 0; i < order(); ++i) {
        if (labels[i] == label) return i;
    }
    fail(ErrorKind::invalid_argument, "unknown group element '" + label + "'");
}

FiniteGroupModel FiniteGroupModel::from_table(std::vector<std::vector<int>> table,
                                              std::vector<std::string> labels) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) fail(ErrorKind::invalid_argument, "not a group: empty element set");
    if (static_cast<int>(table.size()) != n) {
        fail(ErrorKind::invalid_argument, "not a group: table has " + std::to_string(table.size()) +
                                              " rows for " + std::to_string(n) + " elements");
    }
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) {
            fail(ErrorKind::invalid_argument, "not a group: table is not square");
        }
        for (int v : row) {
            if (v < 0 || v >= n) fail(ErrorKind::invalid_argument, "not a group: table entry out of range");
        }
    }
    {
        std::set<std::string> distinct(labels.begin(), labels.end());
        if (static_cast<int>(distinct.size()) != n) {
            fail(ErrorKind::invalid_argument, "not a group: duplicate element labels");
        }
    }
    // Latin square (cancellation property).
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            if (seen_row[table[a][b]]) fail(ErrorKind::invalid_argument, "not a group: row '" + labels[a] + "' repeats an element");
            if (seen_col[table[b][a]]) fail(ErrorKind::invalid_argument, "not a group: column '" + labels[a] + "' repeats an element");
            seen_row[table[a][b]] = true;
            seen_col[table[b][a]] = true;
        }
    }
    // Two-sided identity.
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) fail(ErrorKind::invalid_argument, "not a group: no identity element");
    // Inverses.
    for (int a = 0; a < n; ++a) {
        bool has = false;
        for (int b = 0; b < n && !has; ++b) has = table[a][b] == identity && table[b][a] == identity;
        if (!has) fail(ErrorKind::invalid_argument, "not a group: element '" + labels[a] + "' has no inverse");
    }
    // Associativity.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    fail(ErrorKind::invalid_argument,
                         "not a group: (" + labels[a] + "*" + labels[b] + ")*" + labels[c] +
                             " != " + labels[a] + "*(" + labels[b] + "*" + labels[c] + ")");
                }
            }
        }
    }
    FiniteGroupModel g;
    g.labels = std::move(labels);
    g.table = std::move(table);
    g.identity = identity;
    return g;
}

FiniteGroupModel FiniteGroupModel::klein_four() {
    // e=0, a=1, b=2, c=3 with xor multiplication.
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) table[x][y] = x ^ y;
    }
    return from_table(std::move(table), {"e", "a", "b", "c"});
}

FiniteGroupModel FiniteGroupModel::cyclic(int n) {
    if (n < 1) fail(ErrorKind::invalid_argument, "cyclic group order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        labels[x] = std::to_string(x);
        for (int y = 0; y < n; ++y) table[x][y] = (x + y) % n;
    }
    return from_table(std::move(table), std::move(labels));
}

FiniteGroupModel FiniteGroupModel::preset(const std::string& name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "z2xz2") return klein_four();
    if (lower == "z5") return cyclic(5);
    if (lower.size() > 1 && lower[0] == 'z') {
        bool digits = true;
        for (std::size_t i = 1; i < lower.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(lower[i]));
        if (digits) return cyclic(std::stoi(lower.substr(1)));
    }
    fail(ErrorKind::invalid_argument, "unknown group preset '" + name + "'");
}

std::vector<int> CayleyGraph::neighborhood_positions(int g) const {
    std::vector<int> out;
    out.reserve(neighborhood.size());
    for (int h : neighborhood) out.push_back(position_of[group.mul(g, h)]);
    return out;
}

std::vector<int> CayleyGraph::translation_perm(int g) const {
    std::vector<int> perm(modes());
    for (int f = 0; f < group.order(); ++f) perm[position_of[f]] = position_of[group.mul(g, f)];
    return perm;
}

std::vector<std::string> CayleyGraph::template_labels() const {
    std::vector<std::string> out;
    out.reserve(neighborhood.size());
    for (int h : neighborhood) out.push_back(group.labels[h]);
    return out;
}

namespace {

CayleyGraph finish_graph(FiniteGroupModel group, std::vector<int> neighborhood, std::vector<int> site_order) {
    const int n = group.order();
    if (neighborhood.empty()) fail(ErrorKind::invalid_argument, "neighborhood template is empty");
    {
        std::set<int> distinct(neighborhood.begin(), neighborhood.end());
        if (distinct.size() != neighborhood.size()) {
            fail(ErrorKind::invalid_argument, "neighborhood template repeats an element");
        }
    }
    std::vector<int> position_of(n, -1);
    if (static_cast<int>(site_order.size()) != n) {
        fail(ErrorKind::invalid_argument, "site order must list every group element exactly once");
    }
    for (int p = 0; p < n; ++p) {
        const int e = site_order[p];
        if (e < 0 || e >= n || position_of[e] >= 0) {
            fail(ErrorKind::invalid_argument, "site order must list every group element exactly once");
        }
        position_of[e] = p;
    }
    CayleyGraph graph;
    graph.group = std::move(group);
    graph.neighborhood = std::move(neighborhood);
    graph.site_order = std::move(site_order);
    graph.position_of = std::move(position_of);
    return graph;
}

}  // namespace

CayleyGraph CayleyGraph::make(FiniteGroupModel group, const std::vector<std::string>& neighborhood_labels) {
    std::vector<int> neighborhood;
    neighborhood.reserve(neighborhood_labels.size());
    for (const auto& l : neighborhood_labels) neighborhood.push_back(group.index_of(l));
    // Default mode numbering: template elements first, then the rest in
    // descending index order.
    std::vector<int> site_order = neighborhood;
    std::vector<bool> used(group.order(), false);
    for (int e : neighborhood) used[e] = true;
    for (int e = group.order() - 1; e >= 0; --e) {
        if (!used[e]) site_order.push_back(e);
    }
    return finish_graph(std::move(group), std::move(neighborhood), std::move(site_order));
}

CayleyGraph CayleyGraph::make_with_order(FiniteGroupModel group,
                                         const std::vector<std::string>& neighborhood_labels,
                                         const std::vector<std::string>& site_order_labels) {
    std::vector<int> neighborhood;
    neighborhood.reserve(neighborhood_labels.size());
    for (const auto& l : neighborhood_labels) neighborhood.push_back(group.index_of(l));
    std::vector<int> site_order;
    site_order.reserve(site_order_labels.size());
    for (const auto& l : site_order_labels) site_order.push_back(group.index_of(l));
    return finish_graph(std::move(group), std::move(neighborhood), std::move(site_order));
}

namespace {

long long floor_mod(long long v, long long n) {
    long long r = v % n;
    return r < 0 ? r + n : r;
}

bool regular_integer_quotient(const QuotientSpec& spec) {
    const long long n = spec.quotient_modulus;
    if (n <= 0) fail(ErrorKind::invalid_argument, "quotient modulus must be positive");
    if (spec.offsets.empty()) fail(ErrorKind::invalid_argument, "neighborhood template is empty");
    const std::vector<long long>& offs = spec.offsets;
    std::set<long long> projected_base;  // [N(0)]
    for (long long o : offs) projected_base.insert(floor_mod(o, n));
    for (long long h1 : offs) {
        for (long long h2 : offs) {
            const long long d = h1 - h2;
            // Projection of N(0) ∩ N(d) where N(x) = {x + o : o in offs}:
            // o lies in N(d) exactly when o - d is itself an offset.
            std::set<long long> lhs;
            for (long long o : offs) {
                if (std::find(offs.begin(), offs.end(), o - d) != offs.end()) lhs.insert(floor_mod(o, n));
            }
            // Intersection of projected neighborhoods [N(0)] and [N(d)].
            std::set<long long> rhs;
            for (long long o : offs) {
                const long long cls = floor_mod(d + o, n);
                if (projected_base.count(cls)) rhs.insert(cls);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool regular_finite_quotient(const QuotientSpec& spec) {
    const FiniteGroupModel& base = spec.base_group;
    const int n = base.order();
    if (spec.base_neighborhood.empty()) fail(ErrorKind::invalid_argument, "neighborhood template is empty");
    if (spec.kernel.empty()) fail(ErrorKind::invalid_argument, "kernel is empty");
    std::set<int> kernel(spec.kernel.begin(), spec.kernel.end());
    for (int k : kernel) {
        if (k < 0 || k >= n) fail(ErrorKind::invalid_argument, "kernel element out of range");
    }
    if (!kernel.count(base.identity)) fail(ErrorKind::invalid_argument, "kernel is not a subgroup: missing identity");
    for (int a : kernel) {
        if (!kernel.count(base.inverse(a))) fail(ErrorKind::invalid_argument, "kernel is not a subgroup: not inverse-closed");
        for (int b : kernel) {
            if (!kernel.count(base.mul(a, b))) fail(ErrorKind::invalid_argument, "kernel is not a subgroup: not closed");
        }
    }
    for (int g = 0; g < n; ++g) {
        const int gi = base.inverse(g);
        for (int k : kernel) {
            if (!kernel.count(base.mul(base.mul(g, k), gi))) {
                fail(ErrorKind::constraint, "kernel is not normal in the base group");
            }
        }
    }
    // Class of x = set representative: the coset x*K as a sorted element set.
    auto coset = [&](int x) {
        std::set<int> c;
        for (int k : kernel) c.insert(base.mul(x, k));
        return *c.begin();
    };
    const std::vector<int>& offs = spec.base_neighborhood;
    std::set<int> projected_base;
    for (int o : offs) projected_base.insert(coset(o));
    auto in_offs = [&](int x) { return std::find(offs.begin(), offs.end(), x) != offs.end(); };
    for (int h1 : offs) {
        for (int h2 : offs) {
            const int d = base.mul(h1, base.inverse(h2));
            std::set<int> lhs;  // projection of N(e) ∩ N(d)
            for (int o : offs) {
                // o in N(d)  <=>  o = d*o' with o' in offs  <=>  d^{-1}*o in offs.
                if (in_offs(base.mul(base.inverse(d), o))) lhs.insert(coset(o));
            }
            std::set<int> rhs;  // [N(e)] ∩ [N(d)]
            for (int o : offs) {
                const int cls = coset(base.mul(d, o));
                if (projected_base.count(cls)) rhs.insert(cls);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace

bool is_regular(const QuotientSpec& spec) {
    return spec.integer_base ? regular_integer_quotient(spec) : regular_finite_quotient(spec);
}

}  // namespace fca
