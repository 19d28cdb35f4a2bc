#ifndef RIOT_MESSAGE_HPP
#define RIOT_MESSAGE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace riot {

/// Scalar field value: every observation is either numeric or text.
using Scalar = std::variant<double, std::string>;

struct Field {
    std::string name;
    Scalar value;
};

/// The unit flowing on every dataflow edge. Immutable once emitted;
/// fields keep insertion order and names are unique within a message.
struct Message {
    std::uint64_t id = 0;
    std::string sensorId;
    std::int64_t timestampMs = 0;
    std::optional<std::uint64_t> causeId;
    std::vector<Field> fields;

    const Scalar* find(std::string_view name) const {
        for (const auto& f : fields)
            if (f.name == name) return &f.value;
        return nullptr;
    }

    bool has(std::string_view name) const { return find(name) != nullptr; }

    /// Numeric view of a field; empty if absent or non-numeric.
    std::optional<double> numeric(std::string_view name) const {
        const Scalar* v = find(name);
        if (!v) return std::nullopt;
        if (const double* d = std::get_if<double>(v)) return *d;
        return std::nullopt;
    }

    std::optional<std::string> text(std::string_view name) const {
        const Scalar* v = find(name);
        if (!v) return std::nullopt;
        if (const std::string* s = std::get_if<std::string>(v)) return *s;
        return std::nullopt;
    }

    /// Insert or overwrite a field, preserving first-insertion order.
    void set(std::string_view name, Scalar value) {
        for (auto& f : fields) {
            if (f.name == name) {
                f.value = std::move(value);
                return;
            }
        }
        fields.push_back({std::string(name), std::move(value)});
    }
};

/// Canonical string form of a scalar, used by the stable hash and by
/// serializers. Numbers use shortest round-trip formatting.
std::string canonicalForm(const Scalar& v);

}  // namespace riot

#endif
