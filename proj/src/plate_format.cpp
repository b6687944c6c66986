#include "lpr/plate_format.hpp"

#include "lpr/errors.hpp"

#include <algorithm>

namespace lpr {

namespace {

void check_canonical(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!is_plate_letter(s[i]) && !is_plate_digit(s[i]))
            throw InvalidCharacter(s[i], i);
    }
    if (s.size() < kMinPlateLength || s.size() > kMaxPlateLength)
        throw BadLength(s.size());
}

// Returns the canonical characters, or the first offending position.
std::string strip_and_upper(std::string_view raw, std::optional<std::size_t>& bad) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c == ' ' || c == '-')
            continue;
        if (c >= 'a' && c <= 'z') {
            out.push_back(static_cast<char>(c - 'a' + 'A'));
        } else if (is_plate_letter(c) || is_plate_digit(c)) {
            out.push_back(c);
        } else {
            bad = i;
            return out;
        }
    }
    return out;
}

}  // namespace

bool is_plate_letter(char c) noexcept { return c >= 'A' && c <= 'Z'; }
bool is_plate_digit(char c) noexcept { return c >= '0' && c <= '9'; }

PlateText::PlateText(std::string canonical) : chars_(std::move(canonical)) {
    check_canonical(chars_);
}

const AnalogTable& AnalogTable::standard() {
    static const AnalogTable table = [] {
        AnalogTable t;
        for (auto [d, l] : {std::pair{'0', 'O'}, {'1', 'I'}, {'2', 'Z'}, {'4', 'A'},
                            {'5', 'S'}, {'6', 'G'}, {'7', 'T'}, {'8', 'B'}})
            t.set_digit_to_letter(d, l);
        for (auto [l, d] : {std::pair{'O', '0'}, {'Q', '0'}, {'D', '0'}, {'I', '1'}, {'L', '1'},
                            {'Z', '2'}, {'A', '4'}, {'S', '5'}, {'G', '6'}, {'T', '7'}, {'B', '8'}})
            t.set_letter_to_digit(l, d);
        return t;
    }();
    return table;
}

void AnalogTable::set_digit_to_letter(char digit, char letter) {
    if (!is_plate_digit(digit) || !is_plate_letter(letter))
        throw Error("digit_to_letter entry must map a digit to a letter");
    digit_to_letter_[digit - '0'] = letter;
}

void AnalogTable::set_letter_to_digit(char letter, char digit) {
    if (!is_plate_letter(letter) || !is_plate_digit(digit))
        throw Error("letter_to_digit entry must map a letter to a digit");
    letter_to_digit_[letter - 'A'] = digit;
}

std::optional<char> AnalogTable::letter_for(char digit) const {
    if (!is_plate_digit(digit) || digit_to_letter_[digit - '0'] == 0)
        return std::nullopt;
    return digit_to_letter_[digit - '0'];
}

std::optional<char> AnalogTable::digit_for(char letter) const {
    if (!is_plate_letter(letter) || letter_to_digit_[letter - 'A'] == 0)
        return std::nullopt;
    return letter_to_digit_[letter - 'A'];
}

PlateText normalize(std::string_view raw) {
    if (raw.empty())
        throw BadLength(0);
    std::optional<std::size_t> bad;
    std::string out = strip_and_upper(raw, bad);
    if (bad)
        throw InvalidCharacter(raw[*bad], *bad);
    return PlateText(std::move(out));
}

std::optional<PlateText> try_normalize(std::string_view raw) {
    std::optional<std::size_t> bad;
    std::string out = strip_and_upper(raw, bad);
    if (bad || out.size() < kMinPlateLength || out.size() > kMaxPlateLength)
        return std::nullopt;
    return PlateText(std::move(out));
}

SlotLayout slot_layout(std::size_t length) {
    if (length < kMinPlateLength || length > kMaxPlateLength)
        throw BadLength(length);
    const std::size_t serial_len = std::min<std::size_t>(4, length - 4);
    const std::size_t series_len = length - 4 - serial_len;

    SlotLayout layout{SlotClass::Letter, SlotClass::Letter, SlotClass::Digit, SlotClass::Digit};
    layout.insert(layout.end(), series_len, SlotClass::Letter);
    layout.insert(layout.end(), serial_len, SlotClass::Digit);
    return layout;
}

CorrectionResult correct(const PlateText& text, const AnalogTable& table) {
    const SlotLayout layout = slot_layout(text);
    std::string out = text.str();
    std::vector<std::size_t> changed;
    std::vector<std::size_t> unresolved;

    for (std::size_t i = 0; i < out.size(); ++i) {
        const char c = out[i];
        std::optional<char> replacement;
        if (layout[i] == SlotClass::Letter && is_plate_digit(c))
            replacement = table.letter_for(c);
        else if (layout[i] == SlotClass::Digit && is_plate_letter(c))
            replacement = table.digit_for(c);
        else
            continue;

        if (replacement) {
            out[i] = *replacement;
            changed.push_back(i);
        } else {
            unresolved.push_back(i);
        }
    }
    return CorrectionResult{PlateText(std::move(out)), std::move(changed), std::move(unresolved)};
}

PlateParse validate(const PlateText& text) {
    const SlotLayout layout = slot_layout(text);
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const bool ok = layout[i] == SlotClass::Letter ? is_plate_letter(text[i]) : is_plate_digit(text[i]);
        if (!ok)
            throw ClassMismatch(i);
    }
    const std::size_t serial_len = std::min<std::size_t>(4, text.size() - 4);
    const std::size_t series_len = text.size() - 4 - serial_len;
    const std::string& s = text.str();
    return PlateParse{s.substr(0, 2), s.substr(2, 2), s.substr(4, series_len), s.substr(4 + series_len)};
}

}  // namespace lpr
