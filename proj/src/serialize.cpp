#include "weilmin/serialize.hpp"

#include <sstream>

namespace weilmin {

json cyc_to_json(const CycElt& x) {
    json arr = json::array();
    for (const Rational& c : x.coeffs()) arr.push_back(format_rational(c));
    return arr;
}

CycElt cyc_from_json(const json& j, long p) {
    if (!j.is_array() || j.size() != static_cast<size_t>(p - 1)) {
        throw std::invalid_argument("cyc_from_json: expected an array of " + std::to_string(p - 1) + " rationals");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) coeffs.push_back(parse_rational(e.get<std::string>()));
    return CycElt(p, std::move(coeffs));
}

json matrix_to_json(const ExactMatrix& M) {
    json entries = json::array();
    for (size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < M.cols(); ++j) row.push_back(cyc_to_json(M.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"p", M.prime()}, {"rows", M.rows()}, {"cols", M.cols()}, {"entries", std::move(entries)}};
}

ExactMatrix matrix_from_json(const json& j) {
    const long p = j.at("p").get<long>();
    const size_t rows = j.at("rows").get<size_t>();
    const size_t cols = j.at("cols").get<size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) {
        throw std::invalid_argument("matrix_from_json: bad row count");
    }
    ExactMatrix M(p, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) {
            throw std::invalid_argument("matrix_from_json: bad column count in row " + std::to_string(i));
        }
        for (size_t k = 0; k < cols; ++k) M.at(i, k) = cyc_from_json(entries[i][k], p);
    }
    return M;
}

json quad_to_json(const QuadCoord& q) {
    return json{{"a", q.a.get_str()}, {"b", q.b.get_str()}, {"p", q.p}};
}

QuadCoord quad_from_json(const json& j) {
    return QuadCoord{j.at("p").get<long>(), Integer(j.at("a").get<std::string>()),
                     Integer(j.at("b").get<std::string>())};
}

json heis_to_json(const HeisElt& h, long p) {
    return json{{"lam", h.lam}, {"x", h.x}, {"y", h.y}, {"p", p}};
}

namespace {

json quad_rows_to_json(const std::vector<std::vector<QuadCoord>>& M) {
    json rows = json::array();
    for (const auto& row : M) {
        json r = json::array();
        for (const auto& q : row) r.push_back(json{{"a", q.a.get_str()}, {"b", q.b.get_str()}});
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::vector<QuadCoord>> quad_rows_from_json(const json& j, long p) {
    std::vector<std::vector<QuadCoord>> out;
    for (const auto& row : j) {
        std::vector<QuadCoord> r;
        for (const auto& e : row) {
            r.push_back(QuadCoord{p, Integer(e.at("a").get<std::string>()), Integer(e.at("b").get<std::string>())});
        }
        out.push_back(std::move(r));
    }
    return out;
}

json model_header(long p, long c, const char* series, const std::string& ring) {
    return json{{"schema_version", 1}, {"p", p},    {"c", c}, {"epsilon", quadratic_epsilon(p)},
                {"series", series},    {"ring", ring}};
}

}  // namespace

json minimal_model_to_json(const MinimalModel& m) {
    json doc = model_header(m.q.p, m.q.c, "principal", ring_tag_string(m.ring, m.q.p));
    doc["S"] = quad_rows_to_json(m.Sprime);
    doc["T"] = quad_rows_to_json(m.Tprime);
    return doc;
}

MinimalModel minimal_model_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != 1) {
        throw std::invalid_argument("minimal_model_from_json: unsupported schema_version");
    }
    if (j.at("series").get<std::string>() != "principal") {
        throw std::invalid_argument("minimal_model_from_json: not a principal-series document");
    }
    const long p = j.at("p").get<long>();
    const long c = j.at("c").get<long>();
    MinimalModel m{QuadForm(p, c), quad_rows_from_json(j.at("S"), p), quad_rows_from_json(j.at("T"), p),
                   RingTag::quadratic_integers};
    const std::string ring = j.at("ring").get<std::string>();
    for (RingTag tag : {RingTag::integers, RingTag::quadratic_integers, RingTag::cyclotomic_integers,
                        RingTag::cyclotomic_p_inverted, RingTag::other}) {
        if (ring_tag_string(tag, p) == ring) m.ring = tag;
    }
    return m;
}

json cyclotomic_model_to_json(const WeilModel& m, const RingReport& ring) {
    json doc = model_header(m.q.p, m.q.c, series_name(m.series), ring_tag_string(ring.tag, m.q.p));
    doc["S"] = matrix_to_json(m.S);
    doc["T"] = matrix_to_json(m.T);
    return doc;
}

json report_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json row{{"check", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) row["witness"] = c.witness;
        arr.push_back(std::move(row));
    }
    return arr;
}

namespace {

// Canonical rendering of a + b*omega as (x + y sqrt(D))/2 with x = 2a + b,
// y = b; x and y always share parity, and the half is dropped when both are
// even.
struct QuadParts {
    Integer x, y;
    bool halved;
};

QuadParts quad_parts(const QuadCoord& q) {
    Integer x = 2 * q.a + q.b;
    Integer y = q.b;
    if (x % 2 == 0 && y % 2 == 0) {
        return {x / 2, y / 2, false};
    }
    return {x, y, true};
}

std::string render_quad(const QuadCoord& q, bool latex) {
    const long d = quadratic_epsilon(q.p) * q.p;
    const std::string root = latex ? "\\sqrt{" + std::to_string(d) + "}" : "sqrt(" + std::to_string(d) + ")";
    if (q.b == 0) return q.a.get_str();
    const QuadParts parts = quad_parts(q);
    std::ostringstream body;
    const Integer abs_y = abs(parts.y);
    if (parts.x != 0) {
        body << parts.x.get_str() << (parts.y < 0 ? "-" : "+");
    } else if (parts.y < 0) {
        body << "-";
    }
    if (abs_y != 1) body << abs_y.get_str();
    if (!latex && abs_y != 1) body << "*";
    body << root;
    if (!parts.halved) return body.str();
    if (latex) return "\\frac{1}{2}(" + body.str() + ")";
    return "(" + body.str() + ")/2";
}

}  // namespace

std::string quad_to_latex(const QuadCoord& q) { return render_quad(q, true); }
std::string quad_to_text(const QuadCoord& q) { return render_quad(q, false); }

std::string cyc_to_latex(const CycElt& x) {
    const long p = x.prime();
    std::ostringstream os;
    bool first = true;
    for (long e = p - 2; e >= 0; --e) {
        const Rational& c = x.coeffs()[e];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string coeff = is_integer(abs_c)
                                ? abs_c.get_num().get_str()
                                : "\\frac{" + abs_c.get_num().get_str() + "}{" + abs_c.get_den().get_str() + "}";
        if (e == 0) {
            os << coeff;
        } else {
            if (abs_c != 1) os << coeff;
            os << "\\zeta_{" << p << "}";
            if (e > 1) os << "^{" << e << "}";
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

template <typename Entry, typename Render>
std::string bmatrix(const std::vector<std::vector<Entry>>& rows, Render render) {
    std::ostringstream os;
    os << "\\begin{bmatrix}\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            os << render(rows[i][j]);
            if (j + 1 < rows[i].size()) os << " & ";
        }
        os << (i + 1 < rows.size() ? " \\\\" : "") << "\n";
    }
    os << "\\end{bmatrix}";
    return os.str();
}

std::vector<std::vector<CycElt>> matrix_rows(const ExactMatrix& M) {
    std::vector<std::vector<CycElt>> rows;
    for (size_t i = 0; i < M.rows(); ++i) {
        std::vector<CycElt> row;
        for (size_t j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename Entry, typename Render>
std::string text_matrix(const std::vector<std::vector<Entry>>& rows, Render render) {
    // column-aligned plain text
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width;
    for (const auto& row : rows) {
        std::vector<std::string> r;
        for (size_t j = 0; j < row.size(); ++j) {
            r.push_back(render(row[j]));
            if (width.size() <= j) width.push_back(0);
            width[j] = std::max(width[j], r.back().size());
        }
        cells.push_back(std::move(r));
    }
    std::ostringstream os;
    for (const auto& row : cells) {
        os << "[ ";
        for (size_t j = 0; j < row.size(); ++j) {
            os << std::string(width[j] - row[j].size(), ' ') << row[j];
            if (j + 1 < row.size()) os << "  ";
        }
        os << " ]\n";
    }
    return os.str();
}

}  // namespace

std::string minimal_model_to_latex(const MinimalModel& m) {
    std::ostringstream os;
    os << "% p = " << m.q.p << ", c = " << m.q.c << ", ring = " << ring_tag_string(m.ring, m.q.p) << "\n";
    os << "S' = " << bmatrix(m.Sprime, [](const QuadCoord& q) { return quad_to_latex(q); }) << "\n\n";
    os << "T' = " << bmatrix(m.Tprime, [](const QuadCoord& q) { return quad_to_latex(q); }) << "\n";
    return os.str();
}

std::string minimal_model_to_text(const MinimalModel& m) {
    std::ostringstream os;
    os << "p = " << m.q.p << ", c = " << m.q.c << ", series = principal, ring = "
       << ring_tag_string(m.ring, m.q.p) << "\n";
    os << "S' =\n" << text_matrix(m.Sprime, [](const QuadCoord& q) { return quad_to_text(q); });
    os << "T' =\n" << text_matrix(m.Tprime, [](const QuadCoord& q) { return quad_to_text(q); });
    return os.str();
}

std::string cyclotomic_model_to_latex(const WeilModel& m) {
    std::ostringstream os;
    os << "% p = " << m.q.p << ", c = " << m.q.c << ", series = " << series_name(m.series) << "\n";
    os << "S = " << bmatrix(matrix_rows(m.S), [](const CycElt& x) { return cyc_to_latex(x); }) << "\n\n";
    os << "T = " << bmatrix(matrix_rows(m.T), [](const CycElt& x) { return cyc_to_latex(x); }) << "\n";
    return os.str();
}

std::string cyclotomic_model_to_text(const WeilModel& m, const RingReport& ring) {
    std::ostringstream os;
    os << "p = " << m.q.p << ", c = " << m.q.c << ", series = " << series_name(m.series)
       << ", ring = " << ring_tag_string(ring.tag, m.q.p) << "\n";
    os << "S =\n" << text_matrix(matrix_rows(m.S), [](const CycElt& x) { return x.to_string(); });
    os << "T =\n" << text_matrix(matrix_rows(m.T), [](const CycElt& x) { return x.to_string(); });
    return os.str();
}

}  // namespace weilmin
