#include "supertriv/serialize.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace supertriv {

namespace {

using nlohmann::json;

SuperAlgebra algebra_from(const std::string& family, int rank) {
    if (family == "E") return detecting_e(rank);
    if (family == "F") return detecting_f(rank);
    if (family == "Exterior") return exterior(rank);
    if (family == "GL11") return gl11();
    throw std::invalid_argument("unknown algebra family: " + family);
}

} // namespace

std::string module_to_json(const Supermodule& m) {
    json j;
    j["algebra"]["family"] = family_name(m.algebra.family);
    j["algebra"]["rank"] = m.algebra.rank;
    j["dim_even"] = m.space.dim_even;
    j["dim_odd"] = m.space.dim_odd;
    j["actions"] = json::object();
    for (std::size_t g = 0; g < m.algebra.gens(); ++g) {
        json arr = json::array();
        for (const auto& v : m.actions[g].data()) arr.push_back(rat_str(v));
        j["actions"][m.algebra.gen_names[g]] = std::move(arr);
    }
    return j.dump(2) + "\n";
}

Supermodule module_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("module file is not valid JSON: ") +
                                    e.what());
    }
    Supermodule m;
    try {
        m.algebra = algebra_from(j.at("algebra").at("family").get<std::string>(),
                                 j.at("algebra").at("rank").get<int>());
        m.space.dim_even = j.at("dim_even").get<std::size_t>();
        m.space.dim_odd = j.at("dim_odd").get<std::size_t>();
        const std::size_t d = m.space.total();
        const auto& actions = j.at("actions");
        for (std::size_t g = 0; g < m.algebra.gens(); ++g) {
            const std::string& name = m.algebra.gen_names[g];
            const auto& arr = actions.at(name);
            if (!arr.is_array() || arr.size() != d * d)
                throw std::invalid_argument("action of " + name + " must have " +
                                            std::to_string(d * d) + " entries");
            Matrix a(d, d);
            for (std::size_t i = 0; i < d * d; ++i)
                a.data()[i] = rat_parse(arr[i].get<std::string>());
            m.actions.push_back(std::move(a));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed module file: ") + e.what());
    }
    return m;
}

Supermodule read_module(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return module_from_json(buf.str());
}

void write_module(const std::string& path, const Supermodule& m) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << module_to_json(m);
}

} // namespace supertriv
