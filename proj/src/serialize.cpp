#include "qhal/serialize.hpp"

#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace qhal {

using nlohmann::json;

namespace {

// nlohmann emits the shortest decimal that parses back to the same double,
// so JSON round trips are bit-exact without explicit precision control.
// CSV uses %.17g for the same guarantee.
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string(what) + ": " + e.what());
    }
}

ModelParams params_from_json(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("n") || !j.contains("N"))
        throw std::invalid_argument(std::string(what) + ": expected an object with fields n and N");
    return ModelParams::make(j.at("n").get<int32_t>(), j.at("N").get<int64_t>());
}

cplx cplx_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string(what) + ": complex entries must be [re, im] pairs");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json cplx_to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

// Splits one CSV line on commas; no quoting, the formats carry only numbers.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// A header row starts with a column name ("x,..." / "row,..."); data rows
// always start with an integer.
bool looks_like_header(const std::string& line) {
    return !line.empty() && std::isalpha(static_cast<unsigned char>(line[0]));
}

[[noreturn]] void csv_fail(const char* what, size_t lineno, const std::string& msg) {
    std::ostringstream os;
    os << what << ": line " << lineno << ": " << msg;
    throw std::runtime_error(os.str());
}

int64_t parse_int_field(const std::string& s, const char* what, size_t lineno) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        csv_fail(what, lineno, "expected an integer, got '" + s + "'");
    }
}

double parse_double_field(const std::string& s, const char* what, size_t lineno) {
    // strtod instead of std::stod: the latter throws on subnormal magnitudes
    // (ERANGE underflow), which are perfectly valid doubles to round-trip.
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    bool consumed = end == s.c_str() + s.size() && !s.empty();
    if (!consumed || !std::isfinite(v))
        csv_fail(what, lineno, "expected a number, got '" + s + "'");
    return v;
}

// Iterates the data rows of a CSV body: skips an optional header and blank
// lines, checks the field count, and hands (fields, line number) to the sink.
template <typename RowSink>
void for_each_csv_row(const std::string& text, size_t n_fields, const char* what, RowSink&& sink) {
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    bool first_content = true;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first_content && looks_like_header(line)) {
            first_content = false;
            continue;
        }
        first_content = false;
        std::vector<std::string> fields = split_fields(line);
        if (fields.size() != n_fields) {
            std::ostringstream os;
            os << "expected " << n_fields << " fields, got " << fields.size();
            csv_fail(what, lineno, os.str());
        }
        sink(fields, lineno);
    }
}

// Marks flat index `idx` as seen; duplicate rows and missing rows are both
// contract violations, so loaders track coverage explicitly.
void mark_seen(std::vector<char>& seen, int64_t idx, const char* what, size_t lineno) {
    if (seen[static_cast<size_t>(idx)]) csv_fail(what, lineno, "duplicate entry");
    seen[static_cast<size_t>(idx)] = 1;
}

void require_complete(const std::vector<char>& seen, const char* what) {
    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw std::invalid_argument(std::string(what) + ": incomplete data, " +
                                        std::to_string(seen.size()) + " entries expected");
}

json check_to_json(const CheckResult& c) {
    json jc;
    jc["id"] = c.id;
    jc["value"] = c.value;
    jc["tol"] = c.tolerance;
    jc["pass"] = c.status == "n/a" ? json("n/a") : json(c.status == "pass");
    if (!c.note.empty()) jc["note"] = c.note;
    return jc;
}

}  // namespace

// --- JSON --------------------------------------------------------------------

std::string phase_function_to_json(const PhaseFunction& f) {
    json j;
    j["n"] = f.p.n;
    j["N"] = f.p.N;
    json values = json::array();
    for (const cplx& c : f.v) values.push_back(cplx_to_json(c));
    j["values"] = std::move(values);
    return j.dump();
}

PhaseFunction phase_function_from_json(const std::string& text) {
    const char* what = "phase function json";
    json j = parse_json(text, what);
    ModelParams p = params_from_json(j, what);
    if (!j.contains("values") || !j.at("values").is_array())
        throw std::invalid_argument(std::string(what) + ": missing values array");
    const json& values = j.at("values");
    if (static_cast<int64_t>(values.size()) != p.points)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(p.points) +
                                    " values, got " + std::to_string(values.size()));
    PhaseFunction f(p);
    for (size_t i = 0; i < values.size(); ++i) f.v[i] = cplx_from_json(values[i], what);
    return f;
}

std::string operator_to_json(const Operator& a) {
    json j;
    j["n"] = a.p.n;
    j["N"] = a.p.N;
    json matrix = json::array();
    for (int64_t s = 0; s < a.p.d; ++s) {
        json row = json::array();
        for (int64_t t = 0; t < a.p.d; ++t) row.push_back(cplx_to_json(a.m(s, t)));
        matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    return j.dump();
}

Operator operator_from_json(const std::string& text) {
    const char* what = "operator json";
    json j = parse_json(text, what);
    ModelParams p = params_from_json(j, what);
    if (!j.contains("matrix") || !j.at("matrix").is_array())
        throw std::invalid_argument(std::string(what) + ": missing matrix array");
    const json& matrix = j.at("matrix");
    if (static_cast<int64_t>(matrix.size()) != p.d)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(p.d) +
                                    " rows, got " + std::to_string(matrix.size()));
    Operator a(p);
    for (int64_t s = 0; s < p.d; ++s) {
        const json& row = matrix[static_cast<size_t>(s)];
        if (!row.is_array() || static_cast<int64_t>(row.size()) != p.d)
            throw std::invalid_argument(std::string(what) + ": row " + std::to_string(s) +
                                        " must hold " + std::to_string(p.d) + " entries");
        for (int64_t t = 0; t < p.d; ++t)
            a.m(s, t) = cplx_from_json(row[static_cast<size_t>(t)], what);
    }
    return a;
}

std::string state_vector_to_json(const StateVector& phi) {
    json j = json::array();
    for (int64_t s = 0; s < phi.p.d; ++s) j.push_back(cplx_to_json(phi.v[s]));
    return j.dump();
}

StateVector state_vector_from_json(const std::string& text, const ModelParams& p) {
    const char* what = "state vector json";
    json j = parse_json(text, what);
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected a bare array of [re, im]");
    if (static_cast<int64_t>(j.size()) != p.d)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(p.d) +
                                    " entries, got " + std::to_string(j.size()));
    StateVector phi(p);
    for (int64_t s = 0; s < p.d; ++s) phi.v[s] = cplx_from_json(j[static_cast<size_t>(s)], what);
    return phi;
}

std::string zero_set_to_json(const std::set<DoubledPoint>& s, const ModelParams& p) {
    json j = json::array();
    for (const DoubledPoint& pt : s)
        j.push_back(json::array({pt.z / p.d, pt.z % p.d, pt.j}));
    return j.dump();
}

std::set<DoubledPoint> zero_set_from_json(const std::string& text, const ModelParams& p) {
    const char* what = "zero set json";
    json j = parse_json(text, what);
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected a list of [x, xi, j]");
    std::set<DoubledPoint> out;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument(std::string(what) + ": entries must be [x, xi, j]");
        int64_t x = e[0].get<int64_t>();
        int64_t xi = e[1].get<int64_t>();
        int32_t jj = e[2].get<int32_t>();
        if (x < 0 || x >= p.d || xi < 0 || xi >= p.d || (jj != 0 && jj != 1))
            throw std::invalid_argument(std::string(what) + ": point out of range for this model");
        DoubledPoint pt;
        pt.z = x * p.d + xi;
        pt.j = jj;
        out.insert(pt);
    }
    return out;
}

std::string verification_report_to_json(const VerificationReport& r) {
    json j;
    j["name"] = r.suite;
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
    j["params"] = {{"n", r.n}, {"N", r.N}};
    j["seed"] = r.seed;
    j["wall_seconds"] = r.wall_seconds;
    j["pass"] = r.passed();
    return j.dump(2) + "\n";
}

std::string equivalence_report_to_json(const EquivalenceReport& r, const ModelParams& p) {
    json j;
    j["name"] = r.norm_a + " vs " + r.norm_b;
    bool finite = r.ratio_min > 0.0 && std::isfinite(r.ratio_max);
    json checks = json::array();
    json lo;
    lo["id"] = "ratio_min";
    lo["value"] = r.ratio_min;
    lo["pass"] = finite;
    json hi;
    hi["id"] = "ratio_max";
    hi["value"] = r.ratio_max;
    hi["pass"] = finite;
    checks.push_back(std::move(lo));
    checks.push_back(std::move(hi));
    j["checks"] = std::move(checks);
    j["params"] = {{"n", p.n}, {"N", p.N}, {"family_size", r.family_size}};
    j["seed"] = r.seed;
    return j.dump(2) + "\n";
}

// --- CSV ---------------------------------------------------------------------

std::string phase_function_to_csv(const PhaseFunction& f) {
    std::string out = "x,xi,re,im\n";
    for (int64_t x = 0; x < f.p.d; ++x)
        for (int64_t xi = 0; xi < f.p.d; ++xi) {
            const cplx& c = f.at(x, xi);
            out += std::to_string(x);
            out += ',';
            out += std::to_string(xi);
            out += ',';
            out += fmt17(c.real());
            out += ',';
            out += fmt17(c.imag());
            out += '\n';
        }
    return out;
}

PhaseFunction phase_function_from_csv(const std::string& text, const ModelParams& p) {
    const char* what = "phase function csv";
    PhaseFunction f(p);
    std::vector<char> seen(static_cast<size_t>(p.points), 0);
    for_each_csv_row(text, 4, what, [&](const std::vector<std::string>& fields, size_t lineno) {
        int64_t x = parse_int_field(fields[0], what, lineno);
        int64_t xi = parse_int_field(fields[1], what, lineno);
        if (x < 0 || x >= p.d || xi < 0 || xi >= p.d)
            csv_fail(what, lineno, "coordinates out of range for this model");
        mark_seen(seen, x * p.d + xi, what, lineno);
        f.at(x, xi) = cplx(parse_double_field(fields[2], what, lineno),
                           parse_double_field(fields[3], what, lineno));
    });
    require_complete(seen, what);
    return f;
}

std::string operator_to_csv(const Operator& a) {
    std::string out = "row,col,re,im\n";
    for (int64_t s = 0; s < a.p.d; ++s)
        for (int64_t t = 0; t < a.p.d; ++t) {
            const cplx c = a.m(s, t);
            out += std::to_string(s);
            out += ',';
            out += std::to_string(t);
            out += ',';
            out += fmt17(c.real());
            out += ',';
            out += fmt17(c.imag());
            out += '\n';
        }
    return out;
}

Operator operator_from_csv(const std::string& text, const ModelParams& p) {
    const char* what = "operator csv";
    Operator a(p);
    std::vector<char> seen(static_cast<size_t>(p.d * p.d), 0);
    for_each_csv_row(text, 4, what, [&](const std::vector<std::string>& fields, size_t lineno) {
        int64_t s = parse_int_field(fields[0], what, lineno);
        int64_t t = parse_int_field(fields[1], what, lineno);
        if (s < 0 || s >= p.d || t < 0 || t >= p.d)
            csv_fail(what, lineno, "matrix index out of range for this model");
        mark_seen(seen, s * p.d + t, what, lineno);
        a.m(s, t) = cplx(parse_double_field(fields[2], what, lineno),
                         parse_double_field(fields[3], what, lineno));
    });
    require_complete(seen, what);
    return a;
}

std::string doubled_function_to_csv(const DoubledFunction& g) {
    std::string out = "x,xi,j,re,im\n";
    for (int64_t x = 0; x < g.p.d; ++x)
        for (int64_t xi = 0; xi < g.p.d; ++xi)
            for (int32_t j = 0; j < 2; ++j) {
                const cplx& c = g.at(x * g.p.d + xi, j);
                out += std::to_string(x);
                out += ',';
                out += std::to_string(xi);
                out += ',';
                out += std::to_string(j);
                out += ',';
                out += fmt17(c.real());
                out += ',';
                out += fmt17(c.imag());
                out += '\n';
            }
    return out;
}

DoubledFunction doubled_function_from_csv(const std::string& text, const ModelParams& p) {
    const char* what = "doubled function csv";
    DoubledFunction g(p);
    std::vector<char> seen(static_cast<size_t>(2 * p.points), 0);
    for_each_csv_row(text, 5, what, [&](const std::vector<std::string>& fields, size_t lineno) {
        int64_t x = parse_int_field(fields[0], what, lineno);
        int64_t xi = parse_int_field(fields[1], what, lineno);
        int64_t j = parse_int_field(fields[2], what, lineno);
        if (x < 0 || x >= p.d || xi < 0 || xi >= p.d || (j != 0 && j != 1))
            csv_fail(what, lineno, "coordinates out of range for this model");
        int64_t z = x * p.d + xi;
        mark_seen(seen, 2 * z + j, what, lineno);
        g.at(z, static_cast<int32_t>(j)) = cplx(parse_double_field(fields[3], what, lineno),
                                                parse_double_field(fields[4], what, lineno));
    });
    require_complete(seen, what);
    return g;
}

// --- Files -------------------------------------------------------------------

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::string tmpl = path + ".XXXXXX";
    std::vector<char> tmp(tmpl.begin(), tmpl.end());
    tmp.push_back('\0');
    int fd = ::mkstemp(tmp.data());
    if (fd < 0) throw std::runtime_error("cannot create temp file for " + path + ": " + std::strerror(errno));
    std::string tmp_path(tmp.data());
    size_t written = 0;
    while (written < content.size()) {
        ssize_t k = ::write(fd, content.data() + written, content.size() - written);
        if (k < 0) {
            ::close(fd);
            ::unlink(tmp_path.c_str());
            throw std::runtime_error("write failed for " + path + ": " + std::strerror(errno));
        }
        written += static_cast<size_t>(k);
    }
    ::close(fd);
    if (std::rename(tmp_path.c_str(), path.c_str()) != 0) {
        ::unlink(tmp_path.c_str());
        throw std::runtime_error("rename failed for " + path + ": " + std::strerror(errno));
    }
}

}  // namespace qhal
