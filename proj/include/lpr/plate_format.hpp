#pragma once

// Indian registration-plate grammar:
//   state (2 letters) + district (2 digits) + series (0..3 letters) + serial (1..4 digits)
// plus the look-alike correction pass that forces every character into the
// class its slot expects.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpr {

inline constexpr std::size_t kMinPlateLength = 6;
inline constexpr std::size_t kMaxPlateLength = 11;

/// Canonical plate string: uppercase A-Z / 0-9 only, length in [6, 11].
class PlateText {
public:
    /// Throws InvalidCharacter or BadLength when `canonical` is not already canonical.
    explicit PlateText(std::string canonical);

    const std::string& str() const noexcept { return chars_; }
    std::size_t size() const noexcept { return chars_.size(); }
    char operator[](std::size_t i) const { return chars_[i]; }

    friend bool operator==(const PlateText&, const PlateText&) = default;

private:
    std::string chars_;
};

struct PlateParse {
    std::string state;
    std::string district;
    std::string series;
    std::string serial;

    std::string reassemble() const { return state + district + series + serial; }
    friend bool operator==(const PlateParse&, const PlateParse&) = default;
};

enum class SlotClass { Letter, Digit };
using SlotLayout = std::vector<SlotClass>;

/// Cross-class look-alike substitutions. Lookups return nullopt when the
/// symbol has no analog.
class AnalogTable {
public:
    AnalogTable() = default;

    /// The built-in table: 0O 1I 2Z 4A 5S 6G 7T 8B, plus Q/D -> 0 and L -> 1.
    static const AnalogTable& standard();

    void set_digit_to_letter(char digit, char letter);
    void set_letter_to_digit(char letter, char digit);

    std::optional<char> letter_for(char digit) const;
    std::optional<char> digit_for(char letter) const;

private:
    std::array<char, 10> digit_to_letter_{};
    std::array<char, 26> letter_to_digit_{};
};

struct CorrectionResult {
    PlateText corrected;
    std::vector<std::size_t> changed_positions;
    std::vector<std::size_t> unresolved;
};

bool is_plate_letter(char c) noexcept;
bool is_plate_digit(char c) noexcept;

/// Strips spaces and hyphens and uppercases. Throws InvalidCharacter / BadLength.
PlateText normalize(std::string_view raw);

/// Non-throwing variant for recognizer output of arbitrary length.
std::optional<PlateText> try_normalize(std::string_view raw);

/// Per-position expected class for a plate of `length` characters.
/// The serial takes as many trailing slots as it can (up to 4).
SlotLayout slot_layout(std::size_t length);
inline SlotLayout slot_layout(const PlateText& text) { return slot_layout(text.size()); }

CorrectionResult correct(const PlateText& text, const AnalogTable& table = AnalogTable::standard());

/// Splits a slot-consistent plate into its four parts; throws ClassMismatch
/// naming the first offending position.
PlateParse validate(const PlateText& text);

}  // namespace lpr
