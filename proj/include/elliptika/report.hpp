#ifndef ELLIPTIKA_REPORT_HPP
#define ELLIPTIKA_REPORT_HPP

#include <cstdio>
#include <string>
#include <vector>

#include "elliptika/common.hpp"
#include "elliptika/eisenstein.hpp"
#include "elliptika/transforms.hpp"

namespace elliptika {

// 17 significant digits: enough for exact double round-trips.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string fmt_sig(double x, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

enum class OutputFormat { json, csv, pretty };

inline OutputFormat output_format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "pretty") return OutputFormat::pretty;
    throw domain_error("unknown output format: " + s);
}

// --- verify-pairs rows ------------------------------------------------------

inline std::string verify_csv_header() {
    return "pair_id,y,re_num,im_num,re_cf,im_cf,residual,nodes,X";
}

inline std::string to_csv(const VerifyReport& r) {
    std::string s = r.pair_id;
    s += ',' + fmt17(r.y) + ',' + fmt17(r.numeric.real()) + ',' + fmt17(r.numeric.imag());
    s += ',' + fmt17(r.closed_form.real()) + ',' + fmt17(r.closed_form.imag());
    s += ',' + fmt17(r.abs_residual) + ',' + std::to_string(r.quadrature_nodes);
    s += ',' + fmt17(r.truncation_x);
    return s;
}

inline std::string to_jsonl(const VerifyReport& r) {
    std::string s = "{\"pair_id\":\"" + r.pair_id + "\"";
    s += ",\"y\":" + fmt17(r.y);
    s += ",\"re_num\":" + fmt17(r.numeric.real());
    s += ",\"im_num\":" + fmt17(r.numeric.imag());
    s += ",\"re_cf\":" + fmt17(r.closed_form.real());
    s += ",\"im_cf\":" + fmt17(r.closed_form.imag());
    s += ",\"residual\":" + fmt17(r.abs_residual);
    s += ",\"nodes\":" + std::to_string(r.quadrature_nodes);
    s += ",\"X\":" + fmt17(r.truncation_x);
    s += ",\"pass\":" + std::string(r.pass ? "true" : "false");
    if (!r.note.empty()) {
        s += ",\"note\":\"";
        for (char c : r.note) {
            if (c == '"' || c == '\\') s += '\\';
            s += c;
        }
        s += '"';
    }
    s += "}";
    return s;
}

inline std::string to_pretty(const VerifyReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "pair %-3s y=%-9.4g residual=%-12.4g nodes=%-7ld %s",
                  r.pair_id.c_str(), r.y, r.abs_residual, r.quadrature_nodes,
                  r.pass ? "ok" : (r.note.empty() ? "FAIL" : r.note.c_str()));
    return buf;
}

// --- Eisenstein series rows --------------------------------------------------

struct SeriesRow {
    int j = 0, l = 0;
    cplx s;
    cplx tau;
    cplx value;
    double err_est = 0.0;
    std::string method;
};

inline std::string series_csv_header() {
    return "j,l,s_re,s_im,tau_re,tau_im,value_re,value_im,err_est,method";
}

inline std::string to_csv(const SeriesRow& r) {
    std::string s = std::to_string(r.j) + ',' + std::to_string(r.l);
    s += ',' + fmt17(r.s.real()) + ',' + fmt17(r.s.imag());
    s += ',' + fmt17(r.tau.real()) + ',' + fmt17(r.tau.imag());
    s += ',' + fmt17(r.value.real()) + ',' + fmt17(r.value.imag());
    s += ',' + fmt17(r.err_est) + ',' + r.method;
    return s;
}

inline std::string to_jsonl(const SeriesRow& r) {
    std::string s = "{\"j\":" + std::to_string(r.j) + ",\"l\":" + std::to_string(r.l);
    s += ",\"s_re\":" + fmt17(r.s.real()) + ",\"s_im\":" + fmt17(r.s.imag());
    s += ",\"tau_re\":" + fmt17(r.tau.real()) + ",\"tau_im\":" + fmt17(r.tau.imag());
    s += ",\"value_re\":" + fmt17(r.value.real()) + ",\"value_im\":" + fmt17(r.value.imag());
    s += ",\"err_est\":" + fmt17(r.err_est);
    s += ",\"method\":\"" + r.method + "\"}";
    return s;
}

inline std::string to_pretty(const SeriesRow& r) {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "Lambda(%d,%d) s=(%.6g,%.6g) tau=(%.6g,%.6g) = %.15g %+.15gi  [%s, err~%.2g]",
                  r.j, r.l, r.s.real(), r.s.imag(), r.tau.real(), r.tau.imag(),
                  r.value.real(), r.value.imag(), r.method.c_str(), r.err_est);
    return buf;
}

}  // namespace elliptika

#endif
