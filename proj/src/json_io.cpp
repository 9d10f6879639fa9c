#include "qframe/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qframe {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void emit(const Json& j, std::string& out, int indent) {
    const std::string pad(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        // nlohmann::json stores objects in a std::map, so iteration is key-sorted
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            emit(it.value(), out, indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "}";
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& e : j) flat = flat && is_scalar(e);
        if (flat) {
            out += "[";
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                emit(j[i], out, indent);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            emit(j[i], out, indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "]";
    } else if (j.is_number_float()) {
        out += format_double(j.get<double>());
    } else {
        out += j.dump();
    }
}

template <typename T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::parse_error, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, std::string("bad field '") + key + "': " + e.what());
    }
}

std::vector<std::string> split_label(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::string dump_canonical(const Json& j) {
    std::string out;
    emit(j, out, 0);
    out += "\n";
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::invalid_input, "cannot write '" + path + "'");
    out << text;
}

Json matrix_to_json(const Matrix& A) {
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
        Json rr = Json::array(), ri = Json::array();
        for (Eigen::Index c = 0; c < A.cols(); ++c) {
            rr.push_back(A(r, c).real());
            ri.push_back(A(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    return Json{{"dim", A.rows()}, {"re", re}, {"im", im}};
}

Matrix matrix_from_json(const Json& j) {
    const int d = get_field<int>(j, "dim");
    const auto re = get_field<std::vector<std::vector<double>>>(j, "re");
    const auto im = get_field<std::vector<std::vector<double>>>(j, "im");
    if (d < 1 || static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
        throw Error(ErrorKind::parse_error, "matrix rows do not match dim");
    Matrix A(d, d);
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(re[r].size()) != d || static_cast<int>(im[r].size()) != d)
            throw Error(ErrorKind::parse_error, "matrix columns do not match dim");
        for (int c = 0; c < d; ++c) A(r, c) = cplx(re[r][c], im[r][c]);
    }
    return A;
}

Json frame_to_json(int dim, const OutcomeSet& outcomes, const std::vector<Matrix>& ops) {
    Json o = Json::array();
    for (const auto& A : ops) o.push_back(matrix_to_json(A));
    return Json{{"dim", dim}, {"labels", outcomes.labels}, {"operators", o}};
}

Frame frame_from_json(const Json& j) {
    Frame F;
    F.dim = get_field<int>(j, "dim");
    F.outcomes.labels = get_field<std::vector<std::string>>(j, "labels");
    const auto ops = get_field<Json>(j, "operators");
    if (!ops.is_array() || ops.size() != F.outcomes.labels.size())
        throw Error(ErrorKind::parse_error, "operators and labels differ in length");
    for (const auto& o : ops) {
        F.operators.push_back(matrix_from_json(o));
        if (F.operators.back().rows() != F.dim) throw Error(ErrorKind::dimension_mismatch, "operator size differs from dim");
    }
    return F;
}

DualFrame dual_from_json(const Json& j) {
    Frame F = frame_from_json(j);
    return DualFrame{F.dim, F.outcomes, F.operators};
}

Json distribution_to_json(const QuasiDistribution& mu) {
    std::vector<double> v(mu.values.data(), mu.values.data() + mu.values.size());
    return Json{{"representation", mu.representation}, {"dim", mu.dim}, {"labels", mu.outcomes.labels}, {"values", v}};
}

QuasiDistribution distribution_from_json(const Json& j) {
    QuasiDistribution mu;
    mu.representation = get_field<std::string>(j, "representation");
    mu.dim = get_field<int>(j, "dim");
    mu.outcomes.labels = get_field<std::vector<std::string>>(j, "labels");
    const auto v = get_field<std::vector<double>>(j, "values");
    if (v.size() != mu.outcomes.labels.size()) throw Error(ErrorKind::parse_error, "values and labels differ in length");
    if (mu.dim < 1) throw Error(ErrorKind::parse_error, "dim must be positive");
    mu.values = Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
    mu.sum_deviation = std::abs(mu.values.sum() - 1.0);
    return mu;
}

Json geometry_to_json(const PhaseSpaceGeometry& g) {
    return Json{{"kind", g.kind}, {"points", g.points}, {"lines", g.lines}, {"striations", g.striations}};
}

std::string distribution_csv(const QuasiDistribution& mu) {
    std::string out;
    size_t cols = 0;
    for (const auto& l : mu.outcomes.labels) cols = std::max(cols, split_label(l).size());
    std::vector<std::string> head;
    const std::string& kind = mu.outcomes.geometry;
    if (cols == 2) head = {"q", "p"};
    else if (cols == 3 && kind == "extended-lattice") head = {"q", "p", "sigma"};
    else if (kind == "composite-lattice" && cols % 2 == 0)
        for (size_t i = 0; i < cols / 2; ++i) {
            head.push_back("q" + std::to_string(i + 1));
            head.push_back("p" + std::to_string(i + 1));
        }
    else
        for (size_t i = 0; i < cols; ++i) head.push_back("label" + std::to_string(i));
    for (const auto& h : head) out += h + ",";
    out += "value\n";
    for (size_t i = 0; i < mu.outcomes.labels.size(); ++i) {
        auto parts = split_label(mu.outcomes.labels[i]);
        parts.resize(cols);
        for (const auto& p : parts) out += p + ",";
        out += format_double(mu.values(static_cast<Eigen::Index>(i))) + "\n";
    }
    return out;
}

}  // namespace qframe
