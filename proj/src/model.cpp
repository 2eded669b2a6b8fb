#include "qwalk/model.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qwalk {

namespace {

struct NamedStep
{
    const char* name;
    int i, j;
};

constexpr NamedStep kSteps[] = {
    {"N", 0, 1}, {"NE", 1, 1}, {"E", 1, 0}, {"SE", 1, -1}, {"S", 0, -1},
    {"SW", -1, -1}, {"W", -1, 0}, {"NW", -1, 1}, {"0", 0, 0},
};

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

void assign(WeightedModel& m, std::vector<std::vector<bool>>& seen, const std::string& key, const std::string& value,
            int line, int kcol, int vcol)
{
    std::pair<int, int> st;
    try {
        st = parse_step(key);
    } catch (const ModelError& e) {
        throw ParseError(e.what(), line, kcol);
    }
    if (seen[st.first + 1][st.second + 1])
        throw ParseError("duplicate step '" + key + "'", line, kcol);
    seen[st.first + 1][st.second + 1] = true;
    Rational w;
    try {
        w = parse_rational(value);
    } catch (const AlgebraError& e) {
        throw ParseError(e.what(), line, vcol);
    }
    m.set(st.first, st.second, w);
}

WeightedModel parse_json_model(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset -> line/column
        std::size_t off = e.byte == 0 ? 0 : e.byte - 1;
        int line = 1, col = 1;
        for (std::size_t k = 0; k < off && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw ParseError("invalid JSON", line, col);
    }
    if (!j.is_object())
        throw ParseError("expected a JSON object", 1, 1);
    WeightedModel m;
    std::vector<std::vector<bool>> seen(3, std::vector<bool>(3, false));
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string v;
        if (it.value().is_string())
            v = it.value().get<std::string>();
        else if (it.value().is_number_integer())
            v = std::to_string(it.value().get<long long>());
        else
            throw ParseError("weight for '" + it.key() + "' must be a string or integer", 1, 1);
        assign(m, seen, it.key(), v, 1, 1, 1);
    }
    return m;
}

} // namespace

std::pair<int, int> parse_step(const std::string& name)
{
    std::string s = trim(name);
    std::string up;
    for (char c : s)
        up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& st : kSteps)
        if (up == st.name)
            return {st.i, st.j};
    auto comma = s.find(',');
    if (comma != std::string::npos) {
        std::string a = trim(s.substr(0, comma)), b = trim(s.substr(comma + 1));
        auto small = [](const std::string& v, int& out) {
            if (v == "-1" || v == "0" || v == "1" || v == "+1") {
                out = std::stoi(v);
                return true;
            }
            return false;
        };
        int i, j;
        if (small(a, i) && small(b, j))
            return {i, j};
    }
    throw ModelError("unknown step '" + s + "'");
}

std::string step_name(int i, int j)
{
    for (const auto& st : kSteps)
        if (st.i == i && st.j == j)
            return st.name;
    throw ModelError("step out of range");
}

void WeightedModel::validate() const
{
    bool up = false, down = false;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            if (sgn(d(i, j)) == 0)
                continue;
            if (i == 1 || j == 1)
                up = true;
            if (i == -1 || j == -1)
                down = true;
        }
    if (!up || !down)
        throw ModelError("model needs a step with i=1 or j=1 and a step with i=-1 or j=-1");
}

bool WeightedModel::nonnegative() const
{
    for (const auto& row : w_)
        for (const auto& v : row)
            if (sgn(v) < 0)
                return false;
    return true;
}

WeightedModel WeightedModel::transposed() const
{
    WeightedModel t;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            t.set(j, i, d(i, j));
    return t;
}

WeightedModel WeightedModel::scaled(const Rational& s) const
{
    WeightedModel t;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            t.set(i, j, d(i, j) * s);
    return t;
}

std::vector<std::pair<int, int>> WeightedModel::support() const
{
    std::vector<std::pair<int, int>> out;
    for (const auto& st : kSteps)
        if (sgn(d(st.i, st.j)) != 0)
            out.emplace_back(st.i, st.j);
    return out;
}

std::string WeightedModel::describe() const
{
    std::string s;
    for (const auto& st : kSteps) {
        if (sgn(d(st.i, st.j)) == 0)
            continue;
        if (!s.empty())
            s += ", ";
        s += std::string(st.name) + "=" + d(st.i, st.j).get_str();
    }
    return s.empty() ? "(empty)" : s;
}

WeightedModel WeightedModel::unweighted(const std::vector<std::pair<int, int>>& steps)
{
    WeightedModel m;
    for (auto [i, j] : steps)
        m.set(i, j, 1);
    return m;
}

WeightedModel parse_model(const std::string& text)
{
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_json_model(text);

    WeightedModel m;
    std::vector<std::vector<bool>> seen(3, std::vector<bool>(3, false));
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string body = raw.substr(0, raw.find('#'));
        if (trim(body).empty())
            continue;
        // key: up to '=' or ':'; a bare "i,j" key may contain a comma, so blanks only
        // separate when no explicit separator exists.
        std::size_t sep = body.find_first_of("=:");
        std::string key, value;
        std::size_t vstart;
        if (sep != std::string::npos) {
            key = body.substr(0, sep);
            vstart = sep + 1;
        } else {
            std::size_t ks = body.find_first_not_of(" \t");
            std::size_t ke = body.find_first_of(" \t", ks);
            if (ke == std::string::npos)
                throw ParseError("missing weight", line, static_cast<int>(body.size()) + 1);
            key = body.substr(ks, ke - ks);
            vstart = ke;
        }
        value = body.substr(vstart);
        std::size_t vs = value.find_first_not_of(" \t\r");
        int kcol = static_cast<int>(body.find_first_not_of(" \t")) + 1;
        if (vs == std::string::npos)
            throw ParseError("missing weight", line, static_cast<int>(body.size()) + 1);
        int vcol = static_cast<int>(vstart + vs) + 1;
        std::string v = trim(value);
        if (v.find_first_of(" \t") != std::string::npos)
            throw ParseError("unexpected text after weight", line, vcol + static_cast<int>(v.find_first_of(" \t")));
        assign(m, seen, key, v, line, kcol, vcol);
    }
    return m;
}

WeightedModel load_model(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_model(ss.str());
}

} // namespace qwalk
