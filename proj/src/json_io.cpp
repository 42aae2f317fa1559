#include "epwlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "epwlab/errors.hpp"

namespace epwlab::io {

namespace {

long json_long(const json& j, const char* what) {
    if (!j.is_number_integer()) throw io_error(std::string(what) + " must be an integer");
    return j.get<long>();
}

const json& member(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw io_error(std::string("missing key \"") + key + "\"");
    return *it;
}

}  // namespace

json field_to_json(field_t f) {
    if (f == exactalg::kFieldQ) return json("Q");
    return json(f);
}

field_t field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return exactalg::kFieldQ;
        throw io_error("field string must be \"Q\"");
    }
    const long f = json_long(j, "field");
    if (!exactalg::is_valid_field(f) || f == exactalg::kFieldQ)
        throw io_error("numeric field tag must be an odd prime");
    return f;
}

std::string scalar_to_string(const Scalar& s) {
    if (s.field() == exactalg::kFieldQ) return s.rational().get_str();
    return std::to_string(s.residue());
}

json multipoly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [key, coeff] : p.terms()) {
        json term;
        term["exp"] = exactalg::monomial_exponents(key, p.nvars());
        term["coeff"] = scalar_to_string(coeff);
        terms.push_back(std::move(term));
    }
    json j;
    j["vars"] = p.nvars();
    j["field"] = field_to_json(p.field());
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly multipoly_from_json(const json& j) {
    const field_t f = field_from_json(member(j, "field"));
    const long nvars = json_long(member(j, "vars"), "vars");
    if (nvars < 1 || nvars > exactalg::kMaxVars) throw io_error("unsupported variable count");
    const json& terms = member(j, "terms");
    if (!terms.is_array()) throw io_error("terms must be an array");
    std::vector<std::pair<std::uint64_t, Scalar>> parsed;
    parsed.reserve(terms.size());
    for (const json& t : terms) {
        const json& exp = member(t, "exp");
        if (!exp.is_array() || static_cast<long>(exp.size()) != nvars)
            throw io_error("exponent tuple has the wrong length");
        std::vector<int> e;
        e.reserve(exp.size());
        for (const json& x : exp) {
            const long v = json_long(x, "exponent");
            if (v < 0 || v > exactalg::kMaxExp) throw io_error("exponent out of range");
            e.push_back(static_cast<int>(v));
        }
        const json& coeff = member(t, "coeff");
        if (!coeff.is_string()) throw io_error("coefficients must be strings");
        parsed.emplace_back(exactalg::monomial_key(e),
                            Scalar::parse(f, coeff.get<std::string>()));
    }
    return MultiPoly::from_terms(f, static_cast<int>(nvars), std::move(parsed));
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(scalar_to_string(m.at(i, c)));
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["field"] = field_to_json(m.field());
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const json& j) {
    const field_t f = field_from_json(member(j, "field"));
    const long rows = json_long(member(j, "rows"), "rows");
    const long cols = json_long(member(j, "cols"), "cols");
    if (rows < 0 || cols < 0 || rows > 4096 || cols > 4096) throw io_error("matrix shape out of range");
    const json& entries = member(j, "entries");
    if (!entries.is_array() || static_cast<long>(entries.size()) != rows * cols)
        throw io_error("entry list does not match the matrix shape");
    Matrix m(static_cast<int>(rows), static_cast<int>(cols), f);
    long idx = 0;
    for (int i = 0; i < rows; ++i) {
        for (int c = 0; c < cols; ++c, ++idx) {
            const json& e = entries[idx];
            if (!e.is_string()) throw io_error("matrix entries must be strings");
            m.at(i, c) = Scalar::parse(f, e.get<std::string>());
        }
    }
    return m;
}

json lagrangian_to_json(const exterior::LagrangianSubspace& a) {
    json basis = json::array();
    for (int r = 0; r < a.basis.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < a.basis.cols(); ++c) row.push_back(scalar_to_string(a.basis.at(r, c)));
        basis.push_back(std::move(row));
    }
    json j;
    j["ambient"] = a.ambient == exterior::Ambient::V ? "V" : "Vdual";
    j["field"] = field_to_json(a.field);
    j["basis"] = std::move(basis);
    return j;
}

exterior::LagrangianSubspace lagrangian_from_json(const json& j) {
    const json& amb = member(j, "ambient");
    if (!amb.is_string()) throw io_error("ambient must be \"V\" or \"Vdual\"");
    exterior::Ambient ambient;
    if (amb.get<std::string>() == "V")
        ambient = exterior::Ambient::V;
    else if (amb.get<std::string>() == "Vdual")
        ambient = exterior::Ambient::Vdual;
    else
        throw io_error("ambient must be \"V\" or \"Vdual\"");
    const field_t f = field_from_json(member(j, "field"));
    const json& basis = member(j, "basis");
    if (!basis.is_array() || basis.size() != 10) throw io_error("basis must have 10 rows");
    Matrix m(10, exterior::kDimWedge3, f);
    for (int r = 0; r < 10; ++r) {
        const json& row = basis[r];
        if (!row.is_array() || row.size() != exterior::kDimWedge3)
            throw io_error("basis rows must have 20 coefficients");
        for (int c = 0; c < exterior::kDimWedge3; ++c) {
            const json& e = row[c];
            if (!e.is_string()) throw io_error("basis coefficients must be strings");
            m.at(r, c) = Scalar::parse(f, e.get<std::string>());
        }
    }
    return exterior::make_lagrangian(ambient, m);
}

json lattice_to_json(const lattice::EvenLattice& l) {
    json gram = json::array();
    for (int i = 0; i < l.rank(); ++i) {
        json row = json::array();
        for (int c = 0; c < l.rank(); ++c) {
            if (!l.gram.at(i, c).fits_slong_p()) throw io_error("gram entry too large to serialize");
            row.push_back(l.gram.at(i, c).get_si());
        }
        gram.push_back(std::move(row));
    }
    json labels = json::object();
    for (size_t i = 0; i < l.labels.size(); ++i) labels[std::to_string(i)] = l.labels[i];
    json j;
    j["rank"] = l.rank();
    j["gram"] = std::move(gram);
    j["labels"] = std::move(labels);
    return j;
}

lattice::EvenLattice lattice_from_json(const json& j) {
    const long rank = json_long(member(j, "rank"), "rank");
    if (rank < 1 || rank > 64) throw io_error("lattice rank out of range");
    const json& gram = member(j, "gram");
    if (!gram.is_array() || static_cast<long>(gram.size()) != rank)
        throw io_error("gram must be a rank x rank array");
    std::vector<std::vector<long>> rows;
    rows.reserve(gram.size());
    for (const json& row : gram) {
        if (!row.is_array() || static_cast<long>(row.size()) != rank)
            throw io_error("gram must be a rank x rank array");
        std::vector<long> r;
        r.reserve(row.size());
        for (const json& x : row) r.push_back(json_long(x, "gram entry"));
        rows.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    const auto it = j.find("labels");
    if (it != j.end() && it->is_object() && !it->empty()) {
        labels.assign(static_cast<size_t>(rank), "");
        for (const auto& [key, value] : it->items()) {
            long idx = 0;
            try {
                idx = std::stol(key);
            } catch (const std::exception&) {
                throw io_error("label keys must be indices");
            }
            if (idx < 0 || idx >= rank) throw io_error("label index out of range");
            if (!value.is_string()) throw io_error("labels must be strings");
            labels[static_cast<size_t>(idx)] = value.get<std::string>();
        }
    }
    return lattice::make_even_lattice(exactalg::IntMat::from_rows(rows), std::move(labels));
}

json census_to_json(const epw::CensusResult& c) {
    json by_corank = json::object();
    for (const auto& [corank, count] : c.by_corank) by_corank[std::to_string(corank)] = count;
    json high = json::array();
    for (const auto& [pt, corank] : c.high_corank) high.push_back(json::array({json(pt), json(corank)}));
    json j;
    j["p"] = c.p;
    j["total"] = c.total;
    j["by_corank"] = std::move(by_corank);
    j["high_corank"] = std::move(high);
    return j;
}

epw::CensusResult census_from_json(const json& j) {
    epw::CensusResult c;
    c.p = json_long(member(j, "p"), "p");
    c.total = json_long(member(j, "total"), "total");
    const json& by = member(j, "by_corank");
    if (!by.is_object()) throw io_error("by_corank must be an object");
    for (const auto& [key, value] : by.items()) {
        long corank = 0;
        try {
            corank = std::stol(key);
        } catch (const std::exception&) {
            throw io_error("by_corank keys must be coranks");
        }
        c.by_corank[static_cast<int>(corank)] = json_long(value, "count");
    }
    const auto it = j.find("high_corank");
    if (it != j.end()) {
        if (!it->is_array()) throw io_error("high_corank must be an array");
        for (const json& entry : *it) {
            if (!entry.is_array() || entry.size() != 2) throw io_error("bad high_corank entry");
            std::vector<long> pt;
            for (const json& x : entry[0]) pt.push_back(json_long(x, "coordinate"));
            c.high_corank.emplace_back(std::move(pt),
                                       static_cast<int>(json_long(entry[1], "corank")));
        }
    }
    return c;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open \"" + path + "\" for reading");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw io_error("malformed JSON in \"" + path + "\": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open \"" + path + "\" for writing");
    out << j.dump(2) << '\n';
    if (!out) throw io_error("write to \"" + path + "\" failed");
}

}  // namespace epwlab::io
