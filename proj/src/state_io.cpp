#include "qmono/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qmono {

using nlohmann::json;

std::string to_json_string(const PureState& psi) {
    json amps = json::array();
    for (const auto& a : psi.amplitudes()) amps.push_back({a.real(), a.imag()});
    return json{{"num_qubits", psi.num_qubits()}, {"amplitudes", amps}}.dump();
}

std::string to_json_string(const DensityMatrix& rho) {
    json rows = json::array();
    for (int r = 0; r < rho.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < rho.dim(); ++c) {
            const cplx v = rho.matrix()(r, c);
            row.push_back({v.real(), v.imag()});
        }
        rows.push_back(std::move(row));
    }
    return json{{"num_qubits", rho.num_qubits()}, {"matrix", rows}}.dump();
}

namespace {

cplx parse_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw StateParseError("state file: complex entries must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

StateVariant state_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw StateParseError(std::string("state file: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("num_qubits") || !j["num_qubits"].is_number_integer()) {
        throw StateParseError("state file: missing integer field 'num_qubits'");
    }
    const int nq = j["num_qubits"].get<int>();
    if (nq <= 0 || nq > 10) throw StateParseError("state file: num_qubits out of range");
    const size_t dim = 1ULL << nq;

    if (j.contains("amplitudes")) {
        const json& amps = j["amplitudes"];
        if (!amps.is_array() || amps.size() != dim) {
            throw StateParseError("state file: 'amplitudes' must have 2^num_qubits entries");
        }
        std::vector<cplx> v;
        v.reserve(dim);
        for (const auto& e : amps) v.push_back(parse_complex(e));
        return PureState(nq, std::move(v));
    }
    if (j.contains("matrix")) {
        const json& rows = j["matrix"];
        if (!rows.is_array() || rows.size() != dim) {
            throw StateParseError("state file: 'matrix' must have 2^num_qubits rows");
        }
        ComplexMatrix m(static_cast<int>(dim));
        for (size_t r = 0; r < dim; ++r) {
            if (!rows[r].is_array() || rows[r].size() != dim) {
                throw StateParseError("state file: 'matrix' rows must have 2^num_qubits entries");
            }
            for (size_t c = 0; c < dim; ++c) m(static_cast<int>(r), static_cast<int>(c)) = parse_complex(rows[r][c]);
        }
        return DensityMatrix(std::move(m), nq);
    }
    throw StateParseError("state file: expected an 'amplitudes' or 'matrix' field");
}

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + path);
    out << text << '\n';
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace

void write_state_file(const std::string& path, const PureState& psi) {
    write_text(path, to_json_string(psi));
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
    write_text(path, to_json_string(rho));
}

StateVariant read_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open state file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return state_from_json_string(buf.str());
}

}  // namespace qmono
