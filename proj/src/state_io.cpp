#include "negfont/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace negfont {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (std::isfinite(v) && s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

PureState parse_state_json(const std::string& text, int max_qubits) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw StateError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw StateError("state file must hold a JSON object");
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
        throw StateError("state file needs an integer \"n_qubits\"");
    }
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
        throw StateError("state file needs an \"amplitudes\" array");
    }
    const auto n = doc["n_qubits"].get<long long>();
    if (n < 1 || n > max_qubits) {
        throw StateError("n_qubits " + std::to_string(n) + " outside [1, " + std::to_string(max_qubits) + "]");
    }

    std::vector<AmplitudeEntry> entries;
    for (const auto& item : doc["amplitudes"]) {
        if (!item.is_object() || !item.contains("index") || !item["index"].is_string()) {
            throw StateError("amplitude entry needs a string \"index\"");
        }
        auto number = [&](const char* key) {
            if (!item.contains(key)) return 0.0;
            if (!item[key].is_number()) throw StateError(std::string("amplitude field \"") + key + "\" must be a number");
            return item[key].get<double>();
        };
        entries.push_back({item["index"].get<std::string>(), cplx{number("re"), number("im")}});
    }
    try {
        return make_state(static_cast<int>(n), entries, max_qubits);
    } catch (const std::invalid_argument& e) {
        throw StateError(e.what());
    }
}

PureState read_state_file(const std::filesystem::path& path, int max_qubits) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open state file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading state file " + path.string());
    return parse_state_json(buf.str(), max_qubits);
}

std::string format_state_json(const PureState& state) {
    std::ostringstream out;
    out << "{\"n_qubits\": " << state.n_qubits() << ", \"amplitudes\": [";
    bool first = true;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const cplx a = state[i];
        if (a == cplx{}) continue;
        out << (first ? "" : ", ") << "{\"index\": \"" << BasisIndex(state.n_qubits(), i).str()
            << "\", \"re\": " << format_double(a.real()) << ", \"im\": " << format_double(a.imag()) << "}";
        first = false;
    }
    out << "]}\n";
    return out.str();
}

void write_state_file(const PureState& state, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << format_state_json(state);
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace negfont
