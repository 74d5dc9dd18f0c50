#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mckay/rational.hpp"
#include "mckay/reid.hpp"

namespace mckay {

enum class SheafCase { NoEdgeDivisor, SingleCurve, Chain, TripleChain };

inline const char* sheaf_case_name(SheafCase c) {
    switch (c) {
        case SheafCase::NoEdgeDivisor: return "NoEdgeDivisor";
        case SheafCase::SingleCurve: return "SingleCurve";
        case SheafCase::Chain: return "Chain";
        case SheafCase::TripleChain: return "TripleChain";
    }
    return "?";
}

// Combinatorial shadow of the derived image of the skyscraper sheaf of a
// nontrivial character, read off from the edge marking.
struct SheafImage {
    Character character = 0;
    SheafCase kind = SheafCase::NoEdgeDivisor;
    int degree = 0; // 0 or -1
    std::vector<std::string> twist_endpoints; // sorted ids; empty unless a chain
    std::vector<std::string> support;         // sorted ids
    std::string meeting_divisor;              // TripleChain only
    std::string symbolic_tag;                 // opaque inverse-tautological twist marker

    friend bool operator==(const SheafImage& a, const SheafImage& b) {
        return a.character == b.character && a.kind == b.kind && a.degree == b.degree &&
               a.twist_endpoints == b.twist_endpoints && a.support == b.support &&
               a.meeting_divisor == b.meeting_divisor;
    }
};

inline bool is_corner_id(const std::string& id) { return id == "ex" || id == "ey" || id == "ez"; }

inline std::string twist_tag(Character c) { return "L^-1(chi_" + std::to_string(c) + ")"; }

inline SheafImage classify_character(const EdgeMarking& marking, Character chi) {
    if (chi == 0) throw domain_error("classify_character: character must be nontrivial");
    std::vector<EdgeKey> edges;
    for (auto& [e, rec] : marking)
        if (rec.character == chi) edges.push_back(e);

    SheafImage img;
    img.character = chi;
    img.symbolic_tag = twist_tag(chi);

    if (edges.empty()) {
        img.kind = SheafCase::NoEdgeDivisor;
        img.degree = 0;
        return img; // support deliberately left unresolved
    }
    if (edges.size() == 1) {
        img.kind = SheafCase::SingleCurve;
        img.degree = 0;
        img.support = {edges[0].first, edges[0].second};
        std::sort(img.support.begin(), img.support.end());
        return img;
    }

    std::map<std::string, std::vector<std::string>> adj;
    for (auto& e : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    auto config_error = [&]() {
        std::string what = "unrecognized configuration for chi_" + std::to_string(chi) + ": {";
        for (auto& e : edges) what += "(" + e.first + "," + e.second + ")";
        what += "}";
        return domain_error(what);
    };

    // connectivity
    std::set<std::string> seen;
    std::vector<std::string> stack = {edges[0].first};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (auto& w : adj.at(v)) stack.push_back(w);
    }
    if (seen.size() != adj.size()) throw config_error();

    std::vector<std::string> leaves, deg3;
    for (auto& [v, nb] : adj) {
        if (nb.size() == 1) leaves.push_back(v);
        else if (nb.size() == 3) deg3.push_back(v);
        else if (nb.size() != 2) throw config_error();
    }

    if (deg3.empty() && leaves.size() == 2) {
        img.kind = SheafCase::Chain;
        img.degree = -1;
        img.twist_endpoints = leaves;
        std::sort(img.twist_endpoints.begin(), img.twist_endpoints.end());
        for (auto& [v, nb] : adj)
            if (nb.size() == 2) img.support.push_back(v);
        std::sort(img.support.begin(), img.support.end());
        return img;
    }
    if (deg3.size() == 1 && leaves.size() == 3 &&
        std::all_of(leaves.begin(), leaves.end(), [](auto& v) { return is_corner_id(v); })) {
        img.kind = SheafCase::TripleChain;
        img.degree = -1;
        img.twist_endpoints = leaves;
        std::sort(img.twist_endpoints.begin(), img.twist_endpoints.end());
        img.meeting_divisor = deg3[0];
        for (auto& [v, nb] : adj)
            if (!is_corner_id(v)) img.support.push_back(v);
        std::sort(img.support.begin(), img.support.end());
        return img;
    }
    throw config_error();
}

struct ClassifyResult {
    std::vector<SheafImage> images;                             // per nontrivial character
    std::vector<std::pair<Character, std::string>> errors;     // character -> message
};

inline ClassifyResult classify_all(const GroupSpec& g, const EdgeMarking& marking) {
    ClassifyResult res;
    for (Character c = 1; c < g.r; ++c) {
        try {
            res.images.push_back(classify_character(marking, c));
        } catch (const domain_error& e) {
            res.errors.emplace_back(c, e.what());
        }
    }
    return res;
}

// The family prediction for chi_1 .. chi_{k+1}, in the form validated
// against the marking-derived classification (classify_all arbitrates).
inline std::vector<SheafImage> predicted_table(const FamilyParams& fp) {
    std::vector<SheafImage> rows;
    auto ename = [&](long long i) { return "E" + std::to_string(i); };
    auto G = [&](long long n) { return n == 0 ? 0 : fp.line_end(n); };
    for (long long i = 1; i <= fp.k; ++i) {
        SheafImage img;
        img.character = i;
        img.kind = SheafCase::Chain;
        img.degree = -1;
        img.symbolic_tag = twist_tag(i);
        img.twist_endpoints = {fp.corner_s(), ename(G(fp.k + 1 - i))};
        std::sort(img.twist_endpoints.begin(), img.twist_endpoints.end());
        for (long long e = G(fp.k - i) + 1; e < G(fp.k + 1 - i); ++e)
            img.support.push_back(ename(e));
        std::sort(img.support.begin(), img.support.end());
        rows.push_back(std::move(img));
    }
    {
        // chi_{k+1}: a chain along the divisors E_{G(n)-1}.  For k = 1 it
        // joins the two non-s corners; for k >= 2 its final divisor
        // E_{G(k)-1} is the endpoint (the last wall toward the 1-axis corner
        // lies on a longer straight line carrying chi_{k(k+1)}).
        SheafImage img;
        img.character = fp.k + 1;
        img.kind = SheafCase::Chain;
        img.degree = -1;
        img.symbolic_tag = twist_tag(fp.k + 1);
        if (fp.k == 1) {
            img.twist_endpoints = {fp.corner_one(), fp.corner_k()};
            img.support = {ename(G(1) - 1)};
        } else {
            img.twist_endpoints = {fp.corner_k(), ename(G(fp.k) - 1)};
            for (long long n = 1; n < fp.k; ++n) img.support.push_back(ename(G(n) - 1));
        }
        std::sort(img.twist_endpoints.begin(), img.twist_endpoints.end());
        std::sort(img.support.begin(), img.support.end());
        rows.push_back(std::move(img));
    }
    return rows;
}

struct ConditionReport {
    bool ok = true;
    std::vector<Character> offenders;
};

// Every marked character chi_c must satisfy c <= k+1, k | c, or (k+1) | c.
inline ConditionReport character_condition_check(const EdgeMarking& marking, const FamilyParams& fp) {
    std::set<Character> marked;
    for (auto& [e, rec] : marking) marked.insert(rec.character);
    ConditionReport rep;
    for (Character c : marked) {
        bool ok = (1 <= c && c <= fp.k + 1) || c % fp.k == 0 || c % (fp.k + 1) == 0;
        if (!ok) {
            rep.ok = false;
            rep.offenders.push_back(c);
        }
    }
    return rep;
}

struct H0Stats {
    long long h0_count = 0;
    Rational ratio;       // h0_count / (r-1)
    Rational lower_bound; // ((k-1)s - 2k)/(k+1)
    bool bound_holds = false;
};

inline H0Stats h0_stats(const GroupSpec& g, const EdgeMarking& marking, const FamilyParams& fp) {
    auto cls = classify_all(g, marking);
    if (!cls.errors.empty())
        throw domain_error("h0_stats: classification failed for " +
                           std::to_string(cls.errors.size()) + " characters");
    H0Stats st;
    for (auto& img : cls.images)
        if (img.kind == SheafCase::NoEdgeDivisor || img.kind == SheafCase::SingleCurve) st.h0_count++;
    st.ratio = Rational(st.h0_count, g.r - 1);
    st.lower_bound = Rational((fp.k - 1) * fp.s - 2 * fp.k, fp.k + 1);
    st.bound_holds = Rational(st.h0_count) >= st.lower_bound;
    return st;
}

} // namespace mckay
