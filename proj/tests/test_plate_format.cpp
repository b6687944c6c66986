#include <doctest.h>

#include "lpr/errors.hpp"
#include "lpr/plate_format.hpp"

#include <random>

using namespace lpr;

namespace {

constexpr SlotClass L = SlotClass::Letter;
constexpr SlotClass D = SlotClass::Digit;

std::string random_valid(std::mt19937_64& rng, std::size_t n) {
    std::string s;
    for (SlotClass c : slot_layout(n)) {
        if (c == L)
            s.push_back(static_cast<char>('A' + rng() % 26));
        else
            s.push_back(static_cast<char>('0' + rng() % 10));
    }
    return s;
}

// Canonical look-alike of `c` in the other class, when the pair round-trips.
std::optional<char> canonical_analog(char c) {
    const auto& t = AnalogTable::standard();
    if (is_plate_digit(c))
        return t.letter_for(c);
    auto d = t.digit_for(c);
    if (d && t.letter_for(*d) == c)
        return d;
    return std::nullopt;
}

}  // namespace

TEST_CASE("normalize strips separators and uppercases") {
    CHECK(normalize("TS 09 UB 8902").str() == "TS09UB8902");
    CHECK(normalize("ka-51-md-4182").str() == "KA51MD4182");
    CHECK_THROWS_AS(normalize("TS#09"), InvalidCharacter);
    CHECK_THROWS_AS(normalize(""), BadLength);
    CHECK_THROWS_AS(normalize("AB 12"), BadLength);
    CHECK_THROWS_AS(normalize("AB12CDE12345"), BadLength);
    CHECK_FALSE(try_normalize("TS#09").has_value());
    CHECK(try_normalize(" ts09 ").has_value() == false);
    CHECK(try_normalize("ts0912")->str() == "TS0912");
}

TEST_CASE("invalid character reports its position") {
    try {
        normalize("AB1_2345");
        FAIL("expected InvalidCharacter");
    } catch (const InvalidCharacter& e) {
        CHECK(e.character == '_');
        CHECK(e.position == 3);
    }
}

TEST_CASE("PlateText rejects non-canonical input") {
    CHECK_THROWS_AS(PlateText("ts09ub8902"), InvalidCharacter);
    CHECK_THROWS_AS(PlateText("TS 09UB89"), InvalidCharacter);
    CHECK_THROWS_AS(PlateText("TS09"), BadLength);
    CHECK(PlateText("TS09UB8902").size() == 10);
}

TEST_CASE("slot layouts") {
    CHECK(slot_layout(10) == SlotLayout{L, L, D, D, L, L, D, D, D, D});
    CHECK(slot_layout(8) == SlotLayout{L, L, D, D, D, D, D, D});
    CHECK(slot_layout(6) == SlotLayout{L, L, D, D, D, D});
    CHECK(slot_layout(11) == SlotLayout{L, L, D, D, L, L, L, D, D, D, D});
    CHECK_THROWS_AS(slot_layout(5), BadLength);
    CHECK_THROWS_AS(slot_layout(12), BadLength);
}

TEST_CASE("slot layout length algebra") {
    for (std::size_t n = kMinPlateLength; n <= kMaxPlateLength; ++n) {
        const auto layout = slot_layout(n);
        REQUIRE(layout.size() == n);
        CHECK(layout[0] == L);
        CHECK(layout[1] == L);
        CHECK(layout[2] == D);
        CHECK(layout[3] == D);
        std::size_t series = 0;
        std::size_t serial = 0;
        std::size_t i = 4;
        while (i < n && layout[i] == L)
            ++series, ++i;
        while (i < n && layout[i] == D)
            ++serial, ++i;
        CHECK(i == n);
        CHECK(series <= 3);
        CHECK(serial >= 1);
        CHECK(serial <= 4);
        CHECK(2 + 2 + series + serial == n);
    }
}

TEST_CASE("correct swaps look-alikes into their slot class") {
    const auto r = correct(PlateText("T509UB89O2"));
    CHECK(r.corrected.str() == "TS09UB8902");
    CHECK(r.changed_positions == std::vector<std::size_t>{1, 8});
    CHECK(r.unresolved.empty());

    const auto same = correct(PlateText("KA51MD4182"));
    CHECK(same.corrected.str() == "KA51MD4182");
    CHECK(same.changed_positions.empty());

    const auto stuck = correct(PlateText("3A51MD4182"));
    CHECK(stuck.corrected.str() == "3A51MD4182");
    CHECK(stuck.unresolved == std::vector<std::size_t>{0});
    CHECK(stuck.changed_positions.empty());
}

TEST_CASE("one-way letters fold into digits") {
    CHECK(correct(PlateText("TSQ9UB89D2")).corrected.str() == "TS09UB8902");
    CHECK(correct(PlateText("TS09UBL9O2")).corrected.str() == "TS09UB1902");
}

TEST_CASE("validate splits into parts") {
    CHECK(validate(PlateText("TS09UB8902")) == PlateParse{"TS", "09", "UB", "8902"});
    CHECK(validate(PlateText("KA51MD4182")) == PlateParse{"KA", "51", "MD", "4182"});
    CHECK(validate(PlateText("DL0112")) == PlateParse{"DL", "01", "", "12"});
    try {
        validate(PlateText("T509UB8902"));
        FAIL("expected ClassMismatch");
    } catch (const ClassMismatch& e) {
        CHECK(e.position == 1);
    }
}

TEST_CASE("standard analog table") {
    const auto& t = AnalogTable::standard();
    for (char d : std::string("01245678")) {
        const auto l = t.letter_for(d);
        REQUIRE(l.has_value());
        CHECK(is_plate_letter(*l));
        CHECK(t.digit_for(*l) == d);
    }
    CHECK_FALSE(t.letter_for('3').has_value());
    CHECK_FALSE(t.letter_for('9').has_value());
    CHECK(t.digit_for('Q') == '0');
    CHECK(t.digit_for('D') == '0');
    CHECK(t.digit_for('L') == '1');
    CHECK_FALSE(t.digit_for('K').has_value());

    AnalogTable custom;
    CHECK_THROWS_AS(custom.set_digit_to_letter('1', '7'), Error);
    CHECK_THROWS_AS(custom.set_letter_to_digit('1', 'I'), Error);
    custom.set_digit_to_letter('3', 'E');
    CHECK(correct(PlateText("3A51MD4182"), custom).corrected.str() == "EA51MD4182");
}

TEST_CASE("correct is idempotent and yields valid plates") {
    std::mt19937_64 rng(41);
    const std::string alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    for (int i = 0; i < 5000; ++i) {
        const std::size_t n = kMinPlateLength + rng() % (kMaxPlateLength - kMinPlateLength + 1);
        std::string s;
        for (std::size_t k = 0; k < n; ++k)
            s.push_back(alphabet[rng() % alphabet.size()]);
        const auto r = correct(PlateText(s));
        CHECK(r.corrected.size() == n);
        if (!r.unresolved.empty())
            continue;
        CHECK(correct(r.corrected).changed_positions.empty());
        CHECK_NOTHROW(validate(r.corrected));
    }
}

TEST_CASE("every single and double analog corruption is recovered") {
    std::mt19937_64 rng(7);
    for (int sample = 0; sample < 60; ++sample) {
        const std::size_t n = kMinPlateLength + sample % (kMaxPlateLength - kMinPlateLength + 1);
        const std::string plate = random_valid(rng, n);
        std::vector<std::size_t> corruptible;
        for (std::size_t i = 0; i < n; ++i)
            if (canonical_analog(plate[i]))
                corruptible.push_back(i);
        for (std::size_t a = 0; a < corruptible.size(); ++a) {
            std::string one = plate;
            one[corruptible[a]] = *canonical_analog(plate[corruptible[a]]);
            CHECK(correct(PlateText(one)).corrected.str() == plate);
            for (std::size_t b = a + 1; b < corruptible.size(); ++b) {
                std::string two = one;
                two[corruptible[b]] = *canonical_analog(plate[corruptible[b]]);
                CHECK(correct(PlateText(two)).corrected.str() == plate);
            }
        }
    }
}
