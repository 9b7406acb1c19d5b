#include "nomad/text_util.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nomad {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string to_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool iequals(const std::string& a, const std::string& b) {
    return to_lower(a) == to_lower(b);
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream in(s);
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_whitespace(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

size_t word_count(const std::string& s) { return split_whitespace(s).size(); }

std::string truncate_words(const std::string& s, size_t max_words) {
    auto words = split_whitespace(s);
    if (words.size() <= max_words) return trim(s);
    words.resize(max_words);
    return join(words, " ");
}

std::string normalized_key(const std::string& s) {
    std::string lowered = to_lower(trim(s));
    return join(split_whitespace(lowered), " ");
}

std::string slugify(const std::string& s, size_t max_len) {
    std::string out;
    bool pending_dash = false;
    for (char c : to_lower(s)) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            if (pending_dash && !out.empty()) out += '-';
            pending_dash = false;
            out += c;
        } else {
            pending_dash = true;
        }
        if (out.size() >= max_len) break;
    }
    if (out.empty()) out = "item";
    return out;
}

std::string normalize_url(const std::string& url) {
    std::string u = trim(url);
    size_t frag = u.find('#');
    if (frag != std::string::npos) u = u.substr(0, frag);
    size_t scheme_end = u.find("://");
    if (scheme_end != std::string::npos) {
        size_t host_end = u.find('/', scheme_end + 3);
        std::string head = u.substr(0, host_end == std::string::npos ? u.size() : host_end);
        std::string tail = host_end == std::string::npos ? "" : u.substr(host_end);
        u = to_lower(head) + tail;
    } else {
        size_t path = u.find('/');
        std::string head = u.substr(0, path == std::string::npos ? u.size() : path);
        std::string tail = path == std::string::npos ? "" : u.substr(path);
        u = to_lower(head) + tail;
    }
    while (u.size() > 1 && u.back() == '/') u.pop_back();
    return u;
}

namespace {

const char* kAbbreviations[] = {"dr.",  "mr.",  "mrs.", "ms.",  "prof.", "vs.",
                                "e.g.", "i.e.", "etc.", "u.s.", "u.n.",  "al.",
                                "fig.", "no.",  "st.",  "inc.", "ltd.",  "approx."};

bool ends_with_abbreviation(const std::string& text, size_t dot_pos) {
    for (const char* abbr : kAbbreviations) {
        size_t len = std::strlen(abbr);
        if (dot_pos + 1 < len) continue;
        std::string tail = to_lower(text.substr(dot_pos + 1 - len, len));
        if (tail == abbr) {
            // Must be word-initial to count.
            size_t start = dot_pos + 1 - len;
            if (start == 0 || !std::isalnum(static_cast<unsigned char>(text[start - 1]))) return true;
        }
    }
    return false;
}

}  // namespace

std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> out;
    size_t start = 0;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == '.' || c == '!' || c == '?') {
            // Decimal point or abbreviation: not a boundary.
            bool decimal = c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]));
            bool abbr = c == '.' && ends_with_abbreviation(text, i);
            if (!decimal && !abbr) {
                size_t j = i + 1;
                while (j < n && (text[j] == '"' || text[j] == '\'' || text[j] == ')' || text[j] == ']')) ++j;
                size_t k = j;
                while (k < n && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
                bool starts_new = k < n &&
                                  (std::isupper(static_cast<unsigned char>(text[k])) ||
                                   std::isdigit(static_cast<unsigned char>(text[k])));
                if (k > j && (starts_new || k == n)) {
                    std::string sentence = trim(text.substr(start, j - start));
                    if (!sentence.empty()) out.push_back(sentence);
                    start = k;
                    i = k;
                    continue;
                }
                if (k == n) {
                    break;
                }
            }
        }
        ++i;
    }
    std::string tail = trim(text.substr(start));
    if (!tail.empty()) out.push_back(tail);
    return out;
}

namespace {

// Scans one balanced JSON value ({...} or [...]) starting at `pos`, honoring
// string escapes. Returns the end offset (one past) or npos.
size_t scan_balanced(const std::string& text, size_t pos) {
    char open = text[pos];
    char close = open == '{' ? '}' : ']';
    int depth = 0;
    bool in_string = false;
    for (size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == open || (open == '{' && c == '[') || (open == '[' && c == '{')) {
            // Track only the outermost type's depth via generic bracket count.
        }
        if (c == '{' || c == '[') ++depth;
        if (c == '}' || c == ']') {
            --depth;
            if (depth == 0) {
                if (c != close) return std::string::npos;
                return i + 1;
            }
        }
    }
    return std::string::npos;
}

}  // namespace

Result<Json> extract_json(const std::string& text) {
    auto values = extract_json_values(text);
    if (values.empty()) return make_error("no JSON value found in response");
    return values.front();
}

std::vector<Json> extract_json_values(const std::string& text) {
    std::vector<Json> out;
    // Prefer fenced blocks when present.
    size_t fence = text.find("```");
    std::string body = text;
    if (fence != std::string::npos) {
        size_t content_start = text.find('\n', fence);
        size_t fence_end = content_start == std::string::npos
                               ? std::string::npos
                               : text.find("```", content_start);
        if (content_start != std::string::npos && fence_end != std::string::npos) {
            body = text.substr(content_start + 1, fence_end - content_start - 1);
        }
    }
    for (int attempt = 0; attempt < 2; ++attempt) {
        const std::string& src = attempt == 0 ? body : text;
        out.clear();
        for (size_t i = 0; i < src.size(); ++i) {
            if (src[i] != '{' && src[i] != '[') continue;
            size_t end = scan_balanced(src, i);
            if (end == std::string::npos) continue;
            Json parsed = Json::parse(src.substr(i, end - i), nullptr, false);
            if (!parsed.is_discarded()) {
                out.push_back(std::move(parsed));
                i = end - 1;
            }
        }
        if (!out.empty()) break;
        if (&src == &text) break;
    }
    return out;
}

Result<std::string> extract_tag(const std::string& text, const std::string& tag) {
    std::string open = "<" + tag + ">";
    std::string close = "</" + tag + ">";
    size_t b = text.find(open);
    if (b == std::string::npos) return make_error("missing tag <" + tag + ">");
    size_t content = b + open.size();
    size_t e = text.find(close, content);
    if (e == std::string::npos) return make_error("missing closing tag </" + tag + ">");
    return text.substr(content, e - content);
}

std::vector<std::string> extract_all_tags(const std::string& text, const std::string& tag) {
    std::vector<std::string> out;
    std::string open = "<" + tag + ">";
    std::string close = "</" + tag + ">";
    size_t pos = 0;
    while (true) {
        size_t b = text.find(open, pos);
        if (b == std::string::npos) break;
        size_t content = b + open.size();
        size_t e = text.find(close, content);
        if (e == std::string::npos) break;
        out.push_back(text.substr(content, e - content));
        pos = e + close.size();
    }
    return out;
}

std::vector<std::string> extract_citation_keys(const std::string& text) {
    std::vector<std::string> out;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '[') continue;
        size_t j = i + 1;
        size_t letters = 0;
        while (j < text.size() && (std::isupper(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
            if (std::isupper(static_cast<unsigned char>(text[j]))) ++letters;
            ++j;
        }
        size_t digit_start = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (letters == 0 || digit_start == i + 1 || j == digit_start) continue;
        if (j < text.size() && text[j] == ']' && text[digit_start - 1] == '_') {
            out.push_back(text.substr(i + 1, j - i - 1));
            i = j;
        }
    }
    return out;
}

std::string strip_citation_keys(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '[') {
            size_t j = i + 1;
            size_t letters = 0;
            while (j < text.size() && (std::isupper(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                if (std::isupper(static_cast<unsigned char>(text[j]))) ++letters;
                ++j;
            }
            size_t digit_start = j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (letters > 0 && digit_start > i + 1 && j > digit_start && j < text.size() &&
                text[j] == ']' && text[digit_start - 1] == '_') {
                i = j;
                // Drop a space left dangling before punctuation.
                while (!out.empty() && out.back() == ' ' && i + 1 < text.size() &&
                       (text[i + 1] == '.' || text[i + 1] == ',' || text[i + 1] == '[')) {
                    break;
                }
                continue;
            }
        }
        out += text[i];
    }
    return out;
}

double approx_tokens(const std::string& text, double factor) {
    return static_cast<double>(word_count(text)) * factor;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

int64_t parse_date_days(const std::string& iso_date) {
    int y = 0, m = 0, d = 0;
    if (std::sscanf(iso_date.c_str(), "%d-%d-%d", &y, &m, &d) != 3) return -1;
    if (m < 1 || m > 12 || d < 1 || d > 31) return -1;
    // Howard Hinnant's days-from-civil.
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

Result<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return make_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Status write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return make_error("cannot write file: " + path);
    out << content;
    return {};
}

}  // namespace nomad
