#include "dedcrit/zpoly.hpp"

#include "json.hpp"

#include <cctype>
#include <map>

namespace dedcrit {

namespace {

constexpr std::size_t kMaxExponent = 100000;

bool is_decimal_integer(std::string_view s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int to_int(std::string_view s)
{
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s));
}

IntPoly parse_json_array(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed coefficient array: " + std::string(e.what()), e.byte);
    }
    if (!j.is_array()) throw ParseError("expected a JSON array of coefficients", 1);
    std::vector<Int> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& el = j[i];
        if (el.is_string()) {
            const auto& s = el.get_ref<const std::string&>();
            if (!is_decimal_integer(s))
                throw ParseError("coefficient " + std::to_string(i) + " is not a decimal integer: \"" + s + "\"", 1);
            coeffs.push_back(to_int(s));
        } else if (el.is_number_integer()) {
            coeffs.push_back(Int(el.dump()));
        } else {
            throw ParseError("coefficient " + std::to_string(i) + " must be a string or integer", 1);
        }
    }
    return IntPoly(std::move(coeffs));
}

class TermParser {
public:
    TermParser(std::string_view text, char var) : var_(var)
    {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
            chars_.push_back(text[i]);
            cols_.push_back(i + 1);
        }
        end_col_ = text.size() + 1;
    }

    IntPoly parse()
    {
        if (chars_.empty()) throw ParseError("empty polynomial", end_col_);
        std::map<std::size_t, Int> terms;
        bool first = true;
        while (pos_ < chars_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coef, exp] = term();
            terms[exp] += sign * coef;
        }
        std::vector<Int> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, Int(0));
        for (auto& [e, c] : terms) coeffs[e] = c;
        return IntPoly(std::move(coeffs));
    }

private:
    char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

    std::size_t column() const { return pos_ < cols_.size() ? cols_[pos_] : end_col_; }

    [[noreturn]] void fail(const std::string& what) const
    {
        std::string msg = what;
        if (pos_ < chars_.size()) msg += std::string(", found '") + chars_[pos_] + "'";
        throw ParseError(msg, column());
    }

    std::string digits()
    {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(chars_[pos_++]);
        return out;
    }

    std::pair<Int, std::size_t> term()
    {
        Int coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = Int(digits());
            have_coef = true;
            if (peek() == '*') {
                ++pos_;
                if (peek() != var_) fail(std::string("expected '") + var_ + "' after '*'");
            }
        }
        if (peek() != var_) {
            if (!have_coef) fail(std::string("expected a coefficient or '") + var_ + "'");
            return {coef, 0};
        }
        ++pos_;
        std::size_t exp = 1;
        if (peek() == '^') {
            ++pos_;
            const std::size_t at = column();
            std::string e = digits();
            if (e.empty()) fail("expected an exponent after '^'");
            if (e.size() > 6 || std::stoul(e) > kMaxExponent) throw ParseError("exponent too large", at);
            exp = std::stoul(e);
        }
        return {coef, exp};
    }

    std::vector<char> chars_;
    std::vector<std::size_t> cols_;
    std::size_t end_col_ = 1;
    std::size_t pos_ = 0;
    char var_;
};

}  // namespace

IntPoly parse_poly(std::string_view text, char var)
{
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '[') return parse_json_array(text);
        break;
    }
    return TermParser(text, var).parse();
}

}  // namespace dedcrit
