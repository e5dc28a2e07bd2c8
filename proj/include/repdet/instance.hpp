#pragma once

// Instance files: UTF-8 JSON, schema "1".
//
//   {
//     "schema": "1",
//     "mode": "general" | "symmetric",
//     "n": 1,
//     "field": "rational" | "prime:P",
//     "left":  [["u","v","k"], ...],        general only, n+1 entries
//     "right": [["x","y","l"], ...],        general only, n+1 entries
//     "triplets": [["u","v","k"], ...],     symmetric only, n+1 entries
//     "kernel": [["..", ..], ..],           optional (n+1)x(n+1) kernel
//     "provenance": {"seed": S, "range": R} optional
//   }
//
// Scalars are always JSON strings in "p/q" / "p" form; prime-field values
// are residues in [0, P).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "repdet/symmetric.hpp"

namespace repdet {

enum class Mode { general, symmetric };

const char* to_string(Mode m);
Mode parse_mode(std::string_view text);

struct FieldSpec {
    std::uint64_t prime = 0;  // 0 means rationals

    [[nodiscard]] bool is_rational() const { return prime == 0; }
    [[nodiscard]] std::string to_string() const;
    /// "rational" or "prime:P" with P prime.
    static FieldSpec parse(std::string_view text);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct Provenance {
    std::uint64_t seed = 0;
    std::int64_t range = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

using AnySystem = std::variant<SextupleSystem<Rational>, SextupleSystem<Fp>, SymmetricSystem<Rational>,
                               SymmetricSystem<Fp>>;

struct InstanceFile {
    Mode mode = Mode::general;
    FieldSpec field;
    AnySystem system;
    std::optional<std::vector<std::vector<std::string>>> kernel;
    std::optional<Provenance> provenance;

    [[nodiscard]] Index n() const;
};

/// Deterministic rejection-sampled instance; the kernel is materialised.
InstanceFile generate_instance(Mode mode, Index n, std::uint64_t seed, std::int64_t range, FieldSpec field);

std::string serialize(const InstanceFile& file);

/// Throws ParseError on malformed JSON or schema violations, InvalidSystem
/// when the parameters break the system invariants.
InstanceFile deserialize(std::string_view text);

/// D_{n+1} of the instance (of the lifted system in symmetric mode).
std::string kernel_determinant_text(const InstanceFile& file);

}  // namespace repdet
