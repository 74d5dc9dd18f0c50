#pragma once

#include <future>
#include <string>
#include <vector>

#include "mckay/classify.hpp"
#include "mckay/triangulation.hpp"

namespace mckay {

struct ScanRow {
    long long k = 0, s = 0, r = 0;
    long long h0_count = 0;
    Rational ratio, lower_bound;
    bool bound_holds = false;
    bool condition_check = false;
    std::string error; // nonempty when the row could not be computed
};

inline ScanRow scan_one(long long k, long long s) {
    ScanRow row;
    row.k = k;
    row.s = s;
    row.r = 1 + k + s;
    try {
        if (k < 1 || s < 1) throw domain_error("k and s must be positive");
        if (s % k != 0) throw domain_error(std::to_string(s) + " not divisible by k=" + std::to_string(k));
        if (s % (k + 1) != 0)
            throw domain_error(std::to_string(s) + " not divisible by k+1=" + std::to_string(k + 1));
        GroupSpec g;
        g.r = row.r;
        g.weights = {1, k, s};
        validate_group(g);
        auto fp = family_params(g);
        if (!fp) throw domain_error("family parameters absent");
        auto T = build_triangulation(g);
        auto marking = mark_all(g, T);
        auto st = h0_stats(g, marking, *fp);
        row.h0_count = st.h0_count;
        row.ratio = st.ratio;
        row.lower_bound = st.lower_bound;
        row.bound_holds = st.bound_holds;
        row.condition_check = character_condition_check(marking, *fp).ok;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

// Rows run concurrently, output keeps the input order.
inline std::vector<ScanRow> scan_rows(long long k, const std::vector<long long>& s_list) {
    std::vector<std::future<ScanRow>> futs;
    for (long long s : s_list)
        futs.push_back(std::async(std::launch::async, scan_one, k, s));
    std::vector<ScanRow> rows;
    for (auto& f : futs) rows.push_back(f.get());
    return rows;
}

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "k,s,r,h0_count,ratio,lower_bound,bound_holds,condition_check,error\n";
    for (auto& row : rows) {
        out += std::to_string(row.k) + "," + std::to_string(row.s) + "," + std::to_string(row.r) + ",";
        if (row.error.empty()) {
            out += std::to_string(row.h0_count) + "," + decimal_string(row.ratio) + "," +
                   decimal_string(row.lower_bound) + "," + (row.bound_holds ? "true" : "false") + "," +
                   (row.condition_check ? "true" : "false") + ",";
        } else {
            out += ",,,,,";
        }
        std::string err = row.error;
        for (auto& c : err)
            if (c == ',') c = ';';
        out += err + "\n";
    }
    return out;
}

} // namespace mckay
