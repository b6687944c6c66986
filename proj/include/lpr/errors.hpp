#pragma once

#include <stdexcept>
#include <string>

namespace lpr {

// Base of every error raised by the library. Subclasses name the failure
// kind so callers can catch at the granularity they need.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidCharacter : public Error {
public:
    InvalidCharacter(char c, std::size_t position)
        : Error("invalid plate character '" + std::string(1, c) + "' at " + std::to_string(position)),
          character(c), position(position) {}
    char character;
    std::size_t position;
};

class BadLength : public Error {
public:
    explicit BadLength(std::size_t length)
        : Error("plate length " + std::to_string(length) + " outside [6, 11]"), length(length) {}
    std::size_t length;
};

class ClassMismatch : public Error {
public:
    explicit ClassMismatch(std::size_t position)
        : Error("character class mismatch at position " + std::to_string(position)), position(position) {}
    std::size_t position;
};

class BadMagic : public Error { using Error::Error; };
class TruncatedData : public Error { using Error::Error; };
class UnsupportedMaxval : public Error { using Error::Error; };
class OutOfBounds : public Error { using Error::Error; };
class TooSmall : public Error { using Error::Error; };
class BadFps : public Error { using Error::Error; };
class NoGlyphs : public Error { using Error::Error; };
class BlankGlyph : public Error { using Error::Error; };
class IoFailure : public Error { using Error::Error; };
class SpecInvalid : public Error { using Error::Error; };

class MalformedRecord : public Error {
public:
    MalformedRecord(std::size_t line_no, const std::string& why)
        : Error("malformed record at line " + std::to_string(line_no) + ": " + why), line_no(line_no) {}
    std::size_t line_no;
};

}  // namespace lpr
