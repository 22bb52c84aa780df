#pragma once

#include <stdexcept>
#include <string>

namespace persimod {

// Error categories surfaced through the CLI as structured errors.
enum class Errc {
    syntax,
    face_closure,
    birth_order,
    duplicate_simplex,
    bad_field,
    division_by_zero,
    grading,
    boundary_square,
    arity_mismatch,
    cap_exceeded,
    bad_argument,
    io,
    internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::syntax: return "syntax";
    case Errc::face_closure: return "face-closure";
    case Errc::birth_order: return "birth-order";
    case Errc::duplicate_simplex: return "duplicate-simplex";
    case Errc::bad_field: return "bad-field";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::grading: return "grading";
    case Errc::boundary_square: return "boundary-square";
    case Errc::arity_mismatch: return "arity-mismatch";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::bad_argument: return "bad-argument";
    case Errc::io: return "io";
    case Errc::internal: return "internal";
    }
    return "unknown";
}

// Exception carrying a category and, for parse errors, a 1-based line number.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, int line = 0)
        : std::runtime_error(std::move(message)), code_(code), line_(line) {}

    Errc code() const { return code_; }
    int line() const { return line_; }  // 0 = no location

    std::string formatted() const {
        std::string s = "error[";
        s += errc_name(code_);
        s += "]";
        if (line_ > 0) {
            s += " line ";
            s += std::to_string(line_);
        }
        s += ": ";
        s += what();
        return s;
    }

private:
    Errc code_;
    int line_;
};

}  // namespace persimod
