#include "fointerp/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fointerp/error.hpp"
#include "fointerp/eval.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

namespace {

std::string num(int i) { return std::to_string(i); }

std::vector<std::string> names(const std::string& prefix, int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i)
        out.push_back(prefix + num(i));
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// ---- bipartite graphs into two equivalences ----------------------------------

struct GraphParts {
    std::vector<Element> left, right;
};

GraphParts graph_parts(const FiniteStructure& a, bool three_per_side) {
    const ClassId c = three_per_side ? ClassId::BipartiteGraph3 : ClassId::BipartiteGraph;
    if (!(a.signature() == class_signature(c)) || !validate(c, a))
        fail(ErrorKind::Precondition, three_per_side
                                          ? "input must be a bipartite graph with at least three vertices per side"
                                          : "input must be a bipartite graph");
    GraphParts parts;
    for (Element e = 0; e < a.size(); ++e)
        (a.holds("L", {e}) ? parts.left : parts.right).push_back(e);
    return parts;
}

Witness build_big2eq(const FiniteStructure& a, bool with_params) {
    const GraphParts g = graph_parts(a, !with_params);
    const int m = static_cast<int>(g.left.size());
    const int n = static_cast<int>(g.right.size());
    const int base = a.size();
    const int mn = m * n;
    auto s_l = [&](int i, int j) { return base + i * n + j; };
    auto s_r = [&](int i, int j) { return base + mn + i * n + j; };
    auto s_e = [&](int i, int j) { return base + 2 * mn + i * n + j; };
    const int markers = base + 3 * mn;
    const int size = markers + (with_params ? 4 : 42);

    FiniteStructure b(class_signature(ClassId::TwoEq), size);
    std::vector<int> p(size, -1), q(size, -1);
    for (int i = 0; i < m; ++i)
        b.set_name("l" + num(i + 1), g.left[i]);
    for (int j = 0; j < n; ++j)
        b.set_name("r" + num(j + 1), g.right[j]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const std::string ij = num(i + 1) + "_" + num(j + 1);
            b.set_name("sL_" + ij, s_l(i, j));
            b.set_name("sR_" + ij, s_r(i, j));
            b.set_name("sE_" + ij, s_e(i, j));
        }

    // P: the left part, the right part, one class per triple; Q: l_i with its
    // sL row, r_j with its sR column, edge and non-edge sE classes.
    int p_next = 0;
    const int p_left = p_next++, p_right = p_next++;
    for (Element e : g.left)
        p[e] = p_left;
    for (Element e : g.right)
        p[e] = p_right;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const int t = p_next++;
            p[s_l(i, j)] = p[s_r(i, j)] = p[s_e(i, j)] = t;
        }
    int q_next = 0;
    for (int i = 0; i < m; ++i) {
        const int c = q_next++;
        q[g.left[i]] = c;
        for (int j = 0; j < n; ++j)
            q[s_l(i, j)] = c;
    }
    for (int j = 0; j < n; ++j) {
        const int c = q_next++;
        q[g.right[j]] = c;
        for (int i = 0; i < m; ++i)
            q[s_r(i, j)] = c;
    }
    const int q_edge = q_next++, q_non_edge = q_next++;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            q[s_e(i, j)] = a.holds("E", {g.left[i], g.right[j]}) ? q_edge : q_non_edge;

    Witness w{std::move(b), {}};
    FiniteStructure& s = w.structure;
    if (with_params) {
        const Element c_l = markers, c_r = markers + 1, c_p = markers + 2, c_n = markers + 3;
        s.set_name("cL", c_l);
        s.set_name("cR", c_r);
        s.set_name("cP", c_p);
        s.set_name("cN", c_n);
        p[c_l] = p_left;
        p[c_r] = p_right;
        p[c_p] = p_next++;
        p[c_n] = p_next++;
        q[c_p] = q_edge;
        q[c_n] = q_non_edge;
        q[c_l] = q_next++;
        q[c_r] = q_next++;
        w.params = {{"yL", c_l}, {"yR", c_r}, {"yP", c_p}, {"yN", c_n}};
    } else {
        // Marker classes: (name, plain count, tilde count, Q-linked pairs).
        struct Group {
            const char* name;
            int plain, tilde, linked;
        };
        const Group groups[] = {{"cL", 4, 4, 4}, {"cR", 3, 5, 3}, {"cP", 6, 6, 2}, {"cN", 7, 7, 1}};
        int next = markers;
        for (const auto& grp : groups) {
            const std::string gname = grp.name;
            std::vector<Element> plain, tilde;
            for (int k = 1; k <= grp.plain; ++k) {
                s.set_name(gname + num(k), next);
                plain.push_back(next++);
            }
            for (int k = 1; k <= grp.tilde; ++k) {
                s.set_name(gname + "~" + num(k), next);
                tilde.push_back(next++);
            }
            int plain_class = p_next++;
            if (gname == "cL")
                plain_class = p_left;
            else if (gname == "cR")
                plain_class = p_right;
            const int tilde_class = p_next++;
            for (Element e : plain)
                p[e] = plain_class;
            for (Element e : tilde)
                p[e] = tilde_class;
            for (int k = 0; k < grp.linked; ++k)
                q[plain[k]] = q[tilde[k]] = q_next++;
        }
        q[s.at("cP6")] = q_edge;
        q[s.at("cN7")] = q_non_edge;
        for (int e = markers; e < size; ++e)
            if (q[e] < 0)
                q[e] = q_next++;
    }
    set_equivalence(s, "P", p);
    set_equivalence(s, "Q", q);
    return w;
}

// ---- two equivalences into order + equivalence --------------------------------

struct TwoEqParts {
    std::vector<std::vector<Element>> p_classes, q_classes;
};

TwoEqParts two_eq_parts(const FiniteStructure& a) {
    if (!(a.signature() == class_signature(ClassId::TwoEq)) || !validate(ClassId::TwoEq, a))
        fail(ErrorKind::Precondition, "input must be a model of two equivalences {P, Q}");
    return {equivalence_classes(a, "P"), equivalence_classes(a, "Q")};
}

void set_order(FiniteStructure& s, const std::vector<Element>& chain) {
    if (static_cast<int>(chain.size()) != s.size())
        fail(ErrorKind::Precondition, "order chain must list every element once");
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            s.set("<", {chain[i], chain[j]});
}

Witness build_2eq2leq(const FiniteStructure& a, bool with_params) {
    const TwoEqParts parts = two_eq_parts(a);
    const int size_a = a.size();
    const int n = static_cast<int>(parts.p_classes.size());
    const int m = static_cast<int>(parts.q_classes.size());
    const Signature sig = class_signature(ClassId::LEq);

    if (with_params) {
        // A, then s_k^i at size_a + 3(i-1) + k, then a*.
        const int size = size_a + 3 * n + 1;
        auto s_at = [&](int k, int i) { return size_a + 3 * (i - 1) + k; };
        const Element a_star = size - 1;
        FiniteStructure b(sig, size);
        for (int l = 0; l < size_a; ++l)
            b.set_name("a" + num(l + 1), l);
        for (int i = 1; i <= n; ++i)
            for (int k = 0; k < 3; ++k)
                b.set_name("s" + num(k) + "_" + num(i), s_at(k, i));
        b.set_name("a*", a_star);

        std::vector<int> eq(size, -1);
        int next = 0;
        for (int i = 1; i <= n; ++i, ++next)
            for (int k = 0; k < 3; ++k)
                eq[s_at(k, i)] = next;
        for (const auto& cls : parts.q_classes) {
            for (Element e : cls)
                eq[e] = next;
            ++next;
        }
        eq[a_star] = next;
        set_equivalence(b, "~", eq);

        std::vector<Element> chain;
        for (int i = 1; i <= n; ++i)
            chain.push_back(s_at(0, i));
        chain.push_back(a_star);
        for (int i = 1; i <= n; ++i) {
            chain.push_back(s_at(1, i));
            chain.insert(chain.end(), parts.p_classes[i - 1].begin(), parts.p_classes[i - 1].end());
            chain.push_back(s_at(2, i));
        }
        set_order(b, chain);
        return Witness{std::move(b), {{"y", a_star}}};
    }

    // A, the copy A~, S, R, C in this order.
    const int copy = size_a;
    const int s_base = 2 * size_a;
    const int r_base = s_base + 3 * n;
    const int c_base = r_base + 3 * m;
    const int size = c_base + 4;
    auto s_at = [&](int k, int i) { return s_base + 3 * (i - 1) + k; };
    auto r_at = [&](int k, int j) { return r_base + 3 * (j - 1) + k; };
    FiniteStructure b(sig, size);
    for (int l = 0; l < size_a; ++l) {
        b.set_name("a" + num(l + 1), l);
        b.set_name("a~" + num(l + 1), copy + l);
    }
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k < 3; ++k)
            b.set_name("s" + num(k) + "_" + num(i), s_at(k, i));
    for (int j = 1; j <= m; ++j)
        for (int k = 0; k < 3; ++k)
            b.set_name("r" + num(k) + "_" + num(j), r_at(k, j));
    for (int k = 1; k <= 4; ++k)
        b.set_name("c" + num(k), c_base + k - 1);

    std::vector<int> eq(size, -1);
    int next = 0;
    for (int l = 0; l < size_a; ++l, ++next)
        eq[l] = eq[copy + l] = next;
    for (int i = 1; i <= n; ++i, ++next)
        for (int k = 0; k < 3; ++k)
            eq[s_at(k, i)] = next;
    for (int j = 1; j <= m; ++j, ++next)
        for (int k = 0; k < 3; ++k)
            eq[r_at(k, j)] = next;
    for (int k = 0; k < 4; ++k)
        eq[c_base + k] = next;
    set_equivalence(b, "~", eq);

    std::vector<Element> chain;
    for (int i = 1; i <= n; ++i)
        chain.push_back(s_at(0, i));
    for (int j = 1; j <= m; ++j)
        chain.push_back(r_at(0, j));
    for (int k = 0; k < 4; ++k)
        chain.push_back(c_base + k);
    for (int j = 1; j <= m; ++j) {
        chain.push_back(r_at(1, j));
        chain.insert(chain.end(), parts.q_classes[j - 1].begin(), parts.q_classes[j - 1].end());
        chain.push_back(r_at(2, j));
    }
    for (int i = 1; i <= n; ++i) {
        chain.push_back(s_at(1, i));
        for (Element e : parts.p_classes[i - 1])
            chain.push_back(copy + e);
        chain.push_back(s_at(2, i));
    }
    set_order(b, chain);
    return Witness{std::move(b), {}};
}

// ---- schemas --------------------------------------------------------------------

Formula with_var(const Formula& f, const std::string& from, const std::string& to) {
    return substitute(f, {{from, to}});
}

Formula psi_at(Marker m, const std::string& v) { return with_var(marker_formula(m), marker_variable(m), v); }

// Theta_{k1,k2,k3} applied to concrete variable lists.
Formula theta_on(int k3, const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
    std::map<std::string, std::string> ren;
    for (std::size_t i = 0; i < xs.size(); ++i)
        ren["x" + num(static_cast<int>(i) + 1)] = xs[i];
    for (std::size_t i = 0; i < ys.size(); ++i)
        ren["y" + num(static_cast<int>(i) + 1)] = ys[i];
    return substitute(theta(static_cast<int>(xs.size()), static_cast<int>(ys.size()), k3), ren);
}

InterpretationSchema big2eq_schema(bool with_params) {
    InterpretationSchema s;
    s.source = class_signature(ClassId::BipartiteGraph);
    s.target = class_signature(ClassId::TwoEq);
    const std::string link = "Q(x1,uL) & Q(x2,uR) & " + render(p_bar({"uL", "uR", "uE"}));
    if (with_params) {
        s.params = {"yL", "yR", "yP", "yN"};
        s.phi_u = parse("(!Q(x,yL) & P(x,yL)) | (!Q(x,yR) & P(x,yR))");
        s.relations.emplace("L", RelationFormulas{parse("P(x1,yL)"), parse("!P(x1,yL)")});
        s.relations.emplace("R", RelationFormulas{parse("P(x1,yR)"), parse("!P(x1,yR)")});
        s.relations.emplace(
            "E", RelationFormulas{parse("P(x1,yL) & P(x2,yR) & exists uL uR uE. (" + link + " & Q(uE,yP))"),
                                  parse("!P(x1,yL) | !P(x2,yR) | exists uL uR uE. (" + link + " & Q(uE,yN))")});
        return s;
    }
    s.phi_u = fo::disj({psi_at(Marker::PsiL, "x"), psi_at(Marker::PsiR, "x")});
    s.relations.emplace("L", RelationFormulas{psi_at(Marker::PsiL, "x1"), psi_at(Marker::PsiR, "x1")});
    s.relations.emplace("R", RelationFormulas{psi_at(Marker::PsiR, "x1"), psi_at(Marker::PsiL, "x1")});
    const Formula link_f = parse(link);
    Formula pos_tail = fo::exists({"uL", "uR", "uE", "uP"},
                                  fo::conj({psi_at(Marker::PsiP, "uP"), link_f, parse("Q(uE,uP)")}));
    Formula neg_tail = fo::exists({"uL", "uR", "uE", "uN"},
                                  fo::conj({psi_at(Marker::PsiN, "uN"), link_f, parse("Q(uE,uN)")}));
    s.relations.emplace(
        "E", RelationFormulas{fo::conj({psi_at(Marker::PsiL, "x1"), psi_at(Marker::PsiR, "x2"), pos_tail}),
                              fo::disj({psi_at(Marker::PsiR, "x1"), psi_at(Marker::PsiL, "x2"), neg_tail})});
    return s;
}

InterpretationSchema leq_schema(bool with_params) {
    InterpretationSchema s;
    s.source = class_signature(ClassId::TwoEq);
    s.target = class_signature(ClassId::LEq);
    if (with_params) {
        s.params = {"y"};
        s.phi_u = parse("exists z0 z1 z2. (z0 ~ z1 & z1 ~ z2 & z0 < y & y < z1 & z1 < x & x < z2)");
        s.phi_not_u = parse("exists z0. (z0 ~ x & !(y < z0))");
        s.relations.emplace("Q", RelationFormulas{parse("x1 ~ x2"), parse("!(x1 ~ x2)")});
        s.relations.emplace(
            "P", RelationFormulas{
                     parse("exists z0 z1 z2. (z0 ~ z1 & z1 ~ z2 & z0 < y & y < z1 & z1 < x1 & x1 < z2 & z1 < x2 & "
                           "x2 < z2)"),
                     fo::exists({"z"}, fo::conj({with_var(*s.phi_not_u, "x", "z"),
                                                 parse("(x1 < z & z < x2) | (x2 < z & z < x1)")}))});
        return s;
    }
    const Formula psi_y = psi_at(Marker::Psi, "y");
    // Psi(y) & y0 < y < y1 < y2 & y0 ~ y1 ~ y2: y1, y2 delimit one marker interval.
    auto interval = [&](const std::vector<std::string>& extra_vars, const std::string& rest) {
        std::vector<std::string> vars = concat({"y", "y0", "y1", "y2"}, extra_vars);
        return fo::exists(vars, fo::conj({psi_y, parse("y0 < y & y < y1 & y1 < y2 & y0 ~ y1 & y1 ~ y2 & " + rest)}));
    };
    s.phi_u = fo::exists({"y", "y0", "y1", "y2", "z"},
                         fo::conj({psi_y, parse("y0 < y & y < y1 & y1 < x & x < y2 & y0 ~ y1 & y1 ~ y2 & x ~ z & "
                                                "x < z")}));
    s.relations.emplace("Q", RelationFormulas{interval({}, "y1 < x1 & x1 < y2 & y1 < x2 & x2 < y2"),
                                              interval({}, "((x1 < y2 & y2 < x2) | (x2 < y2 & y2 < x1))")});
    s.relations.emplace(
        "P", RelationFormulas{interval({"z1", "z2"}, "z1 ~ x1 & z2 ~ x2 & y1 < z1 & z1 < y2 & y1 < z2 & z2 < y2 & "
                                                     "x1 < z1 & x2 < z2"),
                              interval({"z1", "z2"}, "z1 ~ x1 & z2 ~ x2 & ((z1 < y2 & y2 < z2) | (z2 < y2 & y2 < z1)) "
                                                     "& x1 < z1 & x2 < z2")});
    return s;
}

// ---- demo -------------------------------------------------------------------------

std::string element_list(const FiniteStructure& s, const std::vector<Element>& elems) {
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size(); ++i)
        out += (i ? ", " : "") + s.name_of(elems[i]);
    return out + "}";
}

void write_classes(std::ostringstream& out, const FiniteStructure& s, const std::string& rel) {
    const auto classes = equivalence_classes(s, rel);
    out << rel << "-classes (" << classes.size() << "):\n";
    for (const auto& c : classes)
        out << "  " << element_list(s, c) << "\n";
}

std::string describe_source(const FiniteStructure& a) {
    std::ostringstream out;
    if (a.signature().contains("E")) {
        std::vector<Element> left, right;
        for (Element e = 0; e < a.size(); ++e)
            (a.holds("L", {e}) ? left : right).push_back(e);
        out << "source graph: L = " << element_list(a, left) << ", R = " << element_list(a, right) << ", E = {";
        bool first = true;
        for (const auto& t : a.tuples("E")) {
            out << (first ? "" : ", ") << "(" << a.name_of(t[0]) << "," << a.name_of(t[1]) << ")";
            first = false;
        }
        out << "}\n";
    } else {
        out << "source model of two equivalences on " << a.size() << " elements:\n";
        for (const char* rel : {"P", "Q"}) {
            out << "  " << rel << ":";
            for (const auto& c : equivalence_classes(a, rel))
                out << " " << element_list(a, c);
            out << "\n";
        }
    }
    return out.str();
}

} // namespace

std::string to_string(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::Big2EqParam:
        return "big2eq-param";
    case ConstructionKind::Big2Eq:
        return "big2eq";
    case ConstructionKind::TwoEq2LeqParam:
        return "2eq2leq-param";
    case ConstructionKind::TwoEq2Leq:
        return "2eq2leq";
    }
    return "?";
}

std::optional<ConstructionKind> construction_from_string(const std::string& name) {
    for (auto k : {ConstructionKind::Big2EqParam, ConstructionKind::Big2Eq, ConstructionKind::TwoEq2LeqParam,
                   ConstructionKind::TwoEq2Leq})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

ClassId source_class(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::Big2EqParam:
        return ClassId::BipartiteGraph;
    case ConstructionKind::Big2Eq:
        return ClassId::BipartiteGraph3;
    default:
        return ClassId::TwoEq;
    }
}

ClassId target_class(ConstructionKind k) {
    return k == ConstructionKind::Big2EqParam || k == ConstructionKind::Big2Eq ? ClassId::TwoEq : ClassId::LEq;
}

Witness build(ConstructionKind k, const FiniteStructure& a) {
    switch (k) {
    case ConstructionKind::Big2EqParam:
        return build_big2eq(a, true);
    case ConstructionKind::Big2Eq:
        return build_big2eq(a, false);
    case ConstructionKind::TwoEq2LeqParam:
        return build_2eq2leq(a, true);
    case ConstructionKind::TwoEq2Leq:
        return build_2eq2leq(a, false);
    }
    fail(ErrorKind::Precondition, "unknown construction");
}

InterpretationSchema schema(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::Big2EqParam:
        return big2eq_schema(true);
    case ConstructionKind::Big2Eq:
        return big2eq_schema(false);
    case ConstructionKind::TwoEq2LeqParam:
        return leq_schema(true);
    case ConstructionKind::TwoEq2Leq:
        return leq_schema(false);
    }
    fail(ErrorKind::Precondition, "unknown construction");
}

Formula p_bar(const std::vector<std::string>& vars) {
    std::vector<Formula> parts;
    for (const auto& a : vars)
        for (const auto& b : vars)
            parts.push_back(fo::atom("P", {a, b}));
    return fo::conj(std::move(parts));
}

Formula theta(int k1, int k2, int k3) {
    if (k1 < 1 || k2 < 1 || k3 < 1 || k3 > std::min(k1, k2))
        fail(ErrorKind::Precondition, "theta needs 1 <= k3 <= min(k1, k2), got (" + num(k1) + ", " + num(k2) + ", " +
                                          num(k3) + ")");
    const auto xs = names("x", 1, k1);
    const auto ys = names("y", 1, k2);
    std::vector<Formula> parts{p_bar(xs), p_bar(ys), fo::neg(fo::atom("P", {xs[0], ys[0]}))};
    for (const auto* group : {&xs, &ys})
        for (const auto& a : *group)
            for (const auto& b : *group)
                if (a != b)
                    parts.push_back(fo::neg(fo::atom("Q", {a, b})));
    for (int i = 0; i < k3; ++i)
        parts.push_back(fo::atom("Q", {xs[i], ys[i]}));
    return fo::conj(std::move(parts));
}

int q_link_count(const FiniteStructure& s, Element a, Element b) {
    if (!(s.signature() == class_signature(ClassId::TwoEq)) || !validate(ClassId::TwoEq, s))
        fail(ErrorKind::Precondition, "q_link_count needs a model of two equivalences");
    if (a < 0 || b < 0 || a >= s.size() || b >= s.size())
        fail(ErrorKind::Precondition, "element outside the universe");
    if (s.holds("P", {a, b}))
        fail(ErrorKind::Precondition, s.name_of(a) + " and " + s.name_of(b) + " lie in the same P-class");
    int links = 0;
    for (Element u = 0; u < s.size(); ++u) {
        if (!s.holds("P", {u, a}))
            continue;
        for (Element v = 0; v < s.size(); ++v)
            if (s.holds("P", {v, b}) && s.holds("Q", {u, v}))
                ++links;
    }
    return links;
}

std::string to_string(Marker m) {
    switch (m) {
    case Marker::PsiL:
        return "PsiL";
    case Marker::PsiR:
        return "PsiR";
    case Marker::PsiP:
        return "PsiP";
    case Marker::PsiN:
        return "PsiN";
    case Marker::Psi:
        return "Psi";
    case Marker::AStar:
        return "AStar";
    }
    return "?";
}

std::optional<Marker> marker_from_string(const std::string& name) {
    for (auto m : {Marker::PsiL, Marker::PsiR, Marker::PsiP, Marker::PsiN, Marker::Psi, Marker::AStar})
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

std::string marker_variable(Marker m) { return m == Marker::AStar ? "y" : "x"; }

Formula marker_formula(Marker m) {
    switch (m) {
    case Marker::PsiL:
        return fo::exists(concat(names("y", 1, 4), names("z", 1, 4)),
                          theta_on(4, concat(names("y", 1, 4), {"x"}), names("z", 1, 4)));
    case Marker::PsiR:
        return fo::exists(concat(names("y", 1, 5), names("z", 1, 5)),
                          theta_on(3, concat(names("y", 1, 5), {"x"}), names("z", 1, 5)));
    case Marker::PsiP:
        return fo::exists(concat(names("y", 1, 5), names("z", 1, 6)),
                          fo::disj({theta_on(2, concat({"x"}, names("y", 1, 5)), names("z", 1, 6)),
                                    theta_on(2, concat(names("y", 1, 5), {"x"}), names("z", 1, 6))}));
    case Marker::PsiN:
        return fo::exists(concat(names("y", 1, 6), names("z", 1, 7)),
                          fo::disj({theta_on(1, concat({"x"}, names("y", 1, 6)), names("z", 1, 7)),
                                    theta_on(1, concat(names("y", 1, 6), {"x"}), names("z", 1, 7))}));
    case Marker::Psi:
        return parse("exists x1 x2 x3. (x ~ x1 & x1 ~ x2 & x2 ~ x3 & x < x1 & x1 < x2 & x2 < x3)");
    case Marker::AStar:
        return parse("(forall x. (x > y -> !(x ~ y))) & (forall x1 x2. (x1 < x2 & x2 < y -> !(x1 ~ x2)))");
    }
    fail(ErrorKind::Precondition, "unknown marker");
}

std::vector<Element> definable_set(const FiniteStructure& s, const Formula& f, const std::string& var) {
    const auto fv = free_vars(f);
    if (fv != std::set<std::string>{var}) {
        std::string list;
        for (const auto& v : fv)
            list += (list.empty() ? "" : ", ") + v;
        fail(ErrorKind::Structural, "definable_set needs exactly the free variable '" + var + "', formula has {" +
                                        list + "}");
    }
    ModelChecker checker(s);
    return checker.satisfying(f, var);
}

FiniteStructure example_graph_2x2() {
    FiniteStructure g(class_signature(ClassId::BipartiteGraph), 4);
    const char* labels[] = {"l1", "l2", "r1", "r2"};
    for (Element e = 0; e < 4; ++e) {
        g.set(e < 2 ? "L" : "R", {e});
        g.set_name(labels[e], e);
    }
    g.set("E", {0, 2});
    g.set("E", {1, 3});
    return g;
}

FiniteStructure example_graph_3x3() {
    FiniteStructure g(class_signature(ClassId::BipartiteGraph), 6);
    for (Element e = 0; e < 6; ++e) {
        g.set(e < 3 ? "L" : "R", {e});
        g.set_name((e < 3 ? "l" : "r") + num(e % 3 + 1), e);
    }
    for (Element i = 0; i < 3; ++i)
        g.set("E", {i, i + 3});
    return g;
}

FiniteStructure example_two_eq() {
    FiniteStructure a(class_signature(ClassId::TwoEq), 4);
    const int p[] = {0, 0, 1, 1};
    const int q[] = {0, 1, 0, 1};
    set_equivalence(a, "P", p);
    set_equivalence(a, "Q", q);
    for (Element e = 0; e < 4; ++e)
        a.set_name("a" + num(e + 1), e);
    return a;
}

std::string demo(ConstructionKind k) {
    FiniteStructure a = k == ConstructionKind::Big2EqParam ? example_graph_2x2()
                        : k == ConstructionKind::Big2Eq    ? example_graph_3x3()
                                                           : example_two_eq();
    const Witness w = build(k, a);
    const FiniteStructure& b = w.structure;
    std::ostringstream out;
    out << "construction: " << to_string(k) << "\n" << describe_source(a);
    out << "target: " << b.size() << " elements";
    if (!w.params.empty()) {
        out << ", parameters";
        for (const auto& [p, e] : w.params)
            out << " " << p << "=" << b.name_of(e);
    }
    out << "\n";
    if (target_class(k) == ClassId::TwoEq) {
        write_classes(out, b, "P");
        write_classes(out, b, "Q");
        return out.str();
    }
    // Order chain from smallest to largest: rank = number of smaller elements.
    std::vector<Element> chain(b.size());
    for (Element e = 0; e < b.size(); ++e) {
        int rank = 0;
        for (Element f = 0; f < b.size(); ++f)
            rank += b.holds("<", {f, e});
        chain[rank] = e;
    }
    out << "order:";
    for (std::size_t i = 0; i < chain.size(); ++i)
        out << (i ? " < " : " ") << b.name_of(chain[i]);
    out << "\n";
    write_classes(out, b, "~");
    return out.str();
}

} // namespace fointerp
