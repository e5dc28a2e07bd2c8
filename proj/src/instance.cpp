#include "repdet/instance.hpp"

#include <json.hpp>

#include "repdet/random.hpp"

namespace repdet {

using json = nlohmann::ordered_json;

namespace {

template <ExactField S>
json triplet_json(const S& a, const S& b, const S& c) {
    return json::array({to_string(a), to_string(b), to_string(c)});
}

template <typename Fn>
decltype(auto) with_general(const AnySystem& any, Fn&& fn) {
    return std::visit(
        [&](const auto& sys) -> decltype(auto) {
            using T = std::decay_t<decltype(sys)>;
            if constexpr (std::same_as<T, SymmetricSystem<Rational>> || std::same_as<T, SymmetricSystem<Fp>>) {
                return fn(lift(sys));
            } else {
                return fn(sys);
            }
        },
        any);
}

template <ExactField S>
std::vector<std::vector<std::string>> kernel_strings(const SextupleSystem<S>& sys) {
    const auto k = kernel_matrix(sys, sys.n() + 1);
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(k.rows()));
    for (Index i = 0; i < k.rows(); ++i) {
        for (Index j = 0; j < k.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(to_string(k(i, j)));
    }
    return out;
}

const json& require(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("instance file is missing \"") + key + "\"");
    return j.at(key);
}

template <ExactField S>
S parse_scalar(const json& j, const FieldSpec& field) {
    if (!j.is_string()) throw ParseError("scalars must be JSON strings, got " + j.dump());
    const Rational r = Rational::parse(j.get<std::string>());
    if constexpr (std::same_as<S, Fp>) {
        try {
            return project_mod_p(r, field.prime);
        } catch (const BadReduction& e) {
            throw ParseError(e.what());
        }
    } else {
        return r;
    }
}

template <ExactField S>
std::vector<LeftTriplet<S>> parse_triplets(const json& arr, std::size_t expected, const FieldSpec& field,
                                           const char* what) {
    if (!arr.is_array() || arr.size() != expected) {
        throw ParseError(std::string("\"") + what + "\" must hold n+1 = " + std::to_string(expected) + " triplets");
    }
    std::vector<LeftTriplet<S>> out;
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3) throw ParseError(std::string("\"") + what + "\" entries are triplets");
        out.push_back({parse_scalar<S>(t[0], field), parse_scalar<S>(t[1], field), parse_scalar<S>(t[2], field)});
    }
    return out;
}

template <ExactField S>
AnySystem parse_system(const json& j, Mode mode, std::size_t count, const FieldSpec& field) {
    if (mode == Mode::symmetric) {
        return SymmetricSystem<S>(parse_triplets<S>(require(j, "triplets"), count, field, "triplets"));
    }
    auto left = parse_triplets<S>(require(j, "left"), count, field, "left");
    const auto raw_right = parse_triplets<S>(require(j, "right"), count, field, "right");
    std::vector<RightTriplet<S>> right;
    for (const auto& [a, b, c] : raw_right) right.push_back({a, b, c});
    return SextupleSystem<S>(std::move(left), std::move(right));
}

}  // namespace

const char* to_string(Mode m) { return m == Mode::general ? "general" : "symmetric"; }

Mode parse_mode(std::string_view text) {
    if (text == "general") return Mode::general;
    if (text == "symmetric") return Mode::symmetric;
    throw ParseError("unknown mode '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "rational" : "prime:" + std::to_string(prime);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational") return {};
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) != prefix) throw ParseError("field must be 'rational' or 'prime:P'");
    const std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad prime in field spec '" + std::string(text) + "'");
    }
    std::uint64_t p = 0;
    try {
        p = std::stoull(digits);
    } catch (const std::exception&) {
        throw ParseError("prime out of range in field spec '" + std::string(text) + "'");
    }
    if (p >= kMaxModulus || !is_prime(p)) throw ParseError("field modulus " + digits + " is not an admissible prime");
    return {p};
}

Index InstanceFile::n() const {
    return std::visit([](const auto& sys) { return sys.n(); }, system);
}

InstanceFile generate_instance(Mode mode, Index n, std::uint64_t seed, std::int64_t range, FieldSpec field) {
    if (n < 0) throw GenerationFailed("n must be non-negative");
    if (range < 0) throw GenerationFailed("range must be non-negative");
    std::mt19937_64 rng(seed);
    InstanceFile file{mode, field, SextupleSystem<Rational>({{0, 0, 0}}, {{0, 0, 1}}), std::nullopt,
                      Provenance{seed, range}};
    if (field.is_rational()) {
        if (mode == Mode::general) {
            file.system = random_system<Rational>(n, rng, range);
        } else {
            file.system = random_symmetric_system<Rational>(n, rng, range);
        }
    } else {
        const ScalarFactory<Fp> make{field.prime};
        if (mode == Mode::general) {
            file.system = random_system<Fp>(n, rng, range, make);
        } else {
            file.system = random_symmetric_system<Fp>(n, rng, range, make);
        }
    }
    file.kernel = with_general(file.system, [](const auto& sys) { return kernel_strings(sys); });
    return file;
}

std::string serialize(const InstanceFile& file) {
    json j;
    j["schema"] = "1";
    j["mode"] = to_string(file.mode);
    j["n"] = file.n();
    j["field"] = file.field.to_string();
    std::visit(
        [&](const auto& sys) {
            using T = std::decay_t<decltype(sys)>;
            if constexpr (std::same_as<T, SymmetricSystem<Rational>> || std::same_as<T, SymmetricSystem<Fp>>) {
                auto& arr = j["triplets"] = json::array();
                for (const auto& t : sys.triplets()) arr.push_back(triplet_json(t.u, t.v, t.k));
            } else {
                auto& left = j["left"] = json::array();
                for (const auto& t : sys.left()) left.push_back(triplet_json(t.u, t.v, t.k));
                auto& right = j["right"] = json::array();
                for (const auto& t : sys.right()) right.push_back(triplet_json(t.x, t.y, t.l));
            }
        },
        file.system);
    if (file.kernel) j["kernel"] = *file.kernel;
    if (file.provenance) j["provenance"] = {{"seed", file.provenance->seed}, {"range", file.provenance->range}};
    return j.dump(2) + "\n";
}

InstanceFile deserialize(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance file must be a JSON object");
    const auto& schema = require(j, "schema");
    if (!schema.is_string() || schema.get<std::string>() != "1") throw ParseError("unsupported schema version");
    const auto& mode_j = require(j, "mode");
    const auto& field_j = require(j, "field");
    const auto& n_j = require(j, "n");
    if (!mode_j.is_string() || !field_j.is_string()) throw ParseError("\"mode\" and \"field\" must be strings");
    if (!n_j.is_number_integer() || n_j.get<std::int64_t>() < 0) throw ParseError("\"n\" must be a non-negative integer");

    InstanceFile file{parse_mode(mode_j.get<std::string>()), FieldSpec::parse(field_j.get<std::string>()),
                      SextupleSystem<Rational>({{0, 0, 0}}, {{0, 0, 1}}), std::nullopt, std::nullopt};
    const auto count = static_cast<std::size_t>(n_j.get<std::int64_t>()) + 1;
    file.system = file.field.is_rational() ? parse_system<Rational>(j, file.mode, count, file.field)
                                           : parse_system<Fp>(j, file.mode, count, file.field);

    if (j.contains("kernel")) {
        const auto& k = j.at("kernel");
        if (!k.is_array() || k.size() != count) throw ParseError("\"kernel\" must be an (n+1)x(n+1) array");
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : k) {
            if (!row.is_array() || row.size() != count) throw ParseError("\"kernel\" must be an (n+1)x(n+1) array");
            std::vector<std::string> r;
            for (const auto& e : row) {
                if (!e.is_string()) throw ParseError("kernel entries must be JSON strings");
                r.push_back(e.get<std::string>());
            }
            rows.push_back(std::move(r));
        }
        file.kernel = std::move(rows);
    }
    if (j.contains("provenance")) {
        const auto& p = j.at("provenance");
        if (!p.is_object() || !p.contains("seed") || !p.contains("range") || !p.at("seed").is_number_unsigned() ||
            !p.at("range").is_number_integer()) {
            throw ParseError("\"provenance\" must hold integer \"seed\" and \"range\"");
        }
        file.provenance = Provenance{p.at("seed").get<std::uint64_t>(), p.at("range").get<std::int64_t>()};
    }
    return file;
}

std::string kernel_determinant_text(const InstanceFile& file) {
    return with_general(file.system, [](const auto& sys) { return to_string(det_exact(kernel_matrix(sys, sys.n() + 1))); });
}

}  // namespace repdet
