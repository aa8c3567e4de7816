#pragma once

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "pspkit/errors.hpp"

namespace pspkit::detail {

// Line-oriented tokenizer shared by the text formats. Skips blank lines and
// lines whose first non-blank character is `comment`.
class TextReader {
public:
    TextReader(std::istream& in, char comment) : in_(in), comment_(comment) {}

    // Next content line split on whitespace; false at end of input.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            tokens = split(line);
            if (tokens.empty()) continue;
            if (tokens.front()[0] == comment_) continue;
            return true;
        }
        return false;
    }

    std::vector<std::string> expect(const char* what) {
        std::vector<std::string> tokens;
        if (!next(tokens)) throw ParseError(line_no_ + 1, std::string("unexpected end of input, expected ") + what);
        return tokens;
    }

    void expect_end() {
        std::vector<std::string> tokens;
        if (next(tokens)) throw ParseError(line_no_, "unexpected trailing content");
    }

    int line() const noexcept { return line_no_; }

    long long integer(const std::string& tok, const char* what) const {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(line_no_, std::string("expected integer for ") + what + ", got '" + tok + "'");
        return value;
    }

    int nonneg(const std::string& tok, const char* what) const {
        long long v = integer(tok, what);
        if (v < 0 || v > 1'000'000'000) throw ParseError(line_no_, std::string(what) + " out of range: " + tok);
        return static_cast<int>(v);
    }

    static std::vector<std::string> split(std::string_view line) {
        std::vector<std::string> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) out.emplace_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

private:
    std::istream& in_;
    char comment_;
    int line_no_ = 0;
};

}  // namespace pspkit::detail
