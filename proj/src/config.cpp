#include "coarse/config.hpp"

#include <algorithm>
#include <cctype>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

[[noreturn]] void syntax_error(int line, int col, const std::string& msg) {
    throw CoarseError(ErrorCode::SyntaxError,
                      "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

[[noreturn]] void out_of_range(const std::string& msg) {
    throw CoarseError(ErrorCode::ParamOutOfRange, msg);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_ident(const std::string& s) {
    if (s.empty() || !ident_start(s[0])) return false;
    return std::all_of(s.begin(), s.end(), ident_char);
}

/** One `section.key = value` line, positions 1-based. */
struct RawLine {
    int line = 0;
    std::vector<std::string> path;  // dotted left-hand side
    std::string value;
    int value_col = 0;
};

std::vector<RawLine> split_lines(const std::string& text) {
    std::vector<RawLine> out;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        ++lineno;
        pos = eol + 1;

        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            if (pos > text.size()) break;
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) syntax_error(lineno, static_cast<int>(first) + 1, "expected `key = value`");

        std::string lhs = line.substr(0, eq);
        std::size_t lhs_end = lhs.find_last_not_of(" \t");
        lhs = lhs.substr(first, lhs_end - first + 1);

        RawLine raw;
        raw.line = lineno;
        std::size_t start = 0;
        while (true) {
            std::size_t dot = lhs.find('.', start);
            std::string part = lhs.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
            if (!is_ident(part)) {
                syntax_error(lineno, static_cast<int>(first + start) + 1, "malformed key `" + lhs + "`");
            }
            raw.path.push_back(part);
            if (dot == std::string::npos) break;
            start = dot + 1;
        }

        std::size_t vstart = line.find_first_not_of(" \t", eq + 1);
        if (vstart == std::string::npos) syntax_error(lineno, static_cast<int>(eq) + 2, "missing value");
        std::size_t vend = line.find_last_not_of(" \t\r");
        raw.value = line.substr(vstart, vend - vstart + 1);
        raw.value_col = static_cast<int>(vstart) + 1;
        out.push_back(std::move(raw));
        if (pos > text.size()) break;
    }
    return out;
}

long long parse_integer(const std::string& s, int line, int col) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) syntax_error(line, col, "expected an integer, got `" + s + "`");
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            syntax_error(line, col, "expected an integer, got `" + s + "`");
        }
        if (v > 400000000) out_of_range("integer literal too large: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/** Recursive-descent evaluator for subspace expressions. */
class ExprParser {
public:
    ExprParser(const Space& space, const std::vector<std::pair<std::string, Subspace>>& defined,
               const std::string& text, int line, int col0)
        : space_(space), defined_(defined), text_(text), line_(line), col0_(col0) {}

    Subspace parse() {
        Subspace result = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing text");
        return result;
    }

private:
    const Space& space_;
    const std::vector<std::pair<std::string, Subspace>>& defined_;
    const std::string& text_;
    int line_;
    int col0_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { syntax_error(line_, col0_ + static_cast<int>(pos_), msg); }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected `") + c + "`");
    }

    std::string ident() {
        skip_ws();
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected a name");
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start])))) {
            fail("expected an integer");
        }
        return parse_integer(text_.substr(start, pos_ - start), line_, col0_ + static_cast<int>(start));
    }

    /** +1, -1, or 0, written as `+`, `-`, `0`. */
    int sign_token() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a sign");
        char c = text_[pos_];
        if (c == '+' || c == '-' || c == '0') {
            ++pos_;
            return c == '+' ? 1 : (c == '-' ? -1 : 0);
        }
        fail("expected `+`, `-`, or `0`");
    }

    Subspace expression() {
        std::string name = ident();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            Subspace result = call(name);
            expect(')');
            return result;
        }
        if (name == "all") return Subspace::all(space_);
        for (const auto& [n, sub] : defined_) {
            if (n == name) return sub;
        }
        throw CoarseError(ErrorCode::UnknownName, "unknown subspace `" + name + "`");
    }

    Subspace call(const std::string& fn) {
        if (fn == "union" || fn == "inter") {
            std::vector<Subspace> parts{expression()};
            while (eat(',')) parts.push_back(expression());
            return fn == "union" ? Subspace::union_of(parts) : Subspace::intersection_of(parts);
        }
        if (fn == "compl") return expression().complement();
        if (fn == "ray") {
            int dir = sign_token();
            if (dir == 0) fail("ray direction must be `+` or `-`");
            long long cut = eat(',') ? integer() : 0;
            return Subspace::ray(space_, dir, cut);
        }
        if (fn == "mod") {
            long long m = integer();
            expect(',');
            long long r = integer();
            return Subspace::mod_class(space_, m, r);
        }
        if (fn == "blocks") {
            skip_ws();
            if (pos_ < text_.size() && ident_start(text_[pos_])) {
                std::string word = ident();
                if (word != "geom") fail("expected `geom` or a range list");
                return Subspace::blocks_geometric(space_, integer());
            }
            std::vector<std::pair<long long, long long>> ranges;
            ranges.push_back(range());
            while (eat(',')) ranges.push_back(range());
            return Subspace::block_union(space_, ranges);
        }
        if (fn == "points") {
            std::vector<PointId> pts;
            pts.push_back(space_.line_point(integer()));
            while (eat(',')) pts.push_back(space_.line_point(integer()));
            return Subspace::points(space_, pts);
        }
        if (fn == "halfspace") {
            std::vector<long long> a;
            a.push_back(integer());
            while (eat(',')) a.push_back(integer());
            skip_ws();
            if (pos_ + 1 >= text_.size() || text_[pos_] != '>' || text_[pos_ + 1] != '=') fail("expected `>=`");
            pos_ += 2;
            return Subspace::halfspace(space_, a, integer());
        }
        if (fn == "sector") {
            std::vector<int> signs;
            signs.push_back(sign_token());
            while (eat(',')) signs.push_back(sign_token());
            return Subspace::sector_signs(space_, signs);
        }
        if (fn == "cone") {
            long long ux = integer();
            expect(',');
            long long uy = integer();
            expect(',');
            long long vx = integer();
            expect(',');
            long long vy = integer();
            return Subspace::sector_cone(space_, ux, uy, vx, vy);
        }
        if (fn == "axiscone") {
            long long axis = integer();
            expect(',');
            int sign = sign_token();
            if (sign == 0) fail("axis cone sign must be `+` or `-`");
            return Subspace::axis_cone(space_, static_cast<int>(axis), sign);
        }
        if (fn == "side") {
            long long s = integer();
            if (s != 0 && s != 1) fail("side must be 0 or 1");
            return Subspace::du_side_subspace(space_, static_cast<int>(s));
        }
        fail("unknown subspace expression `" + fn + "`");
    }

    std::pair<long long, long long> range() {
        long long lo = integer();
        skip_ws();
        if (pos_ + 1 >= text_.size() || text_[pos_] != '.' || text_[pos_ + 1] != '.') fail("expected `..`");
        pos_ += 2;
        skip_ws();
        if (pos_ < text_.size() && ident_start(text_[pos_])) {
            if (ident() != "inf") fail("expected an integer or `inf`");
            return {lo, kNoUpperBound};
        }
        return {lo, integer()};
    }
};

struct SpaceKeys {
    std::string kind;
    int kind_line = 0, kind_col = 0;
    std::optional<long long> dim, generators, max_window;
    std::string metric;
    int metric_line = 0, metric_col = 0;
};

struct MapDef {
    std::string name;
    std::string formula;
    int line = 0, col = 0;
    std::optional<long long> window;
};

long long space_point_estimate(const std::string& kind, long long dim, long long gens, long long mw) {
    if (kind == "zplus") return mw + 1;
    if (kind == "zn") {
        long long total = 1;
        for (long long d = 0; d < dim; ++d) {
            if (total > 100000000 / (2 * mw + 1)) return 100000001;
            total *= 2 * mw + 1;
        }
        return total;
    }
    if (kind == "free_group") {
        long long total = 1, shell = 1;
        for (long long i = 0; i < mw; ++i) {
            shell *= (i == 0 ? 2 * gens : 2 * gens - 1);
            total += shell;
            if (total > 100000000) return 100000001;
        }
        return total;
    }
    if (kind == "dihedral") return 4 * mw + 2;
    return 2 * (2 * mw + 1);  // z_disjoint_z
}

Space build_space(const SpaceKeys& keys, long long max_window) {
    const std::string& kind = keys.kind;
    const int mw = static_cast<int>(max_window);
    if (kind == "zplus") return Space::zplus(mw);
    if (kind == "zn") {
        GridMetric metric = GridMetric::LInf;
        if (!keys.metric.empty()) {
            if (keys.metric == "l1") {
                metric = GridMetric::L1;
            } else if (keys.metric != "linf") {
                syntax_error(keys.metric_line, keys.metric_col, "metric must be `linf` or `l1`");
            }
        }
        return Space::zn(static_cast<int>(keys.dim.value_or(1)), metric, mw);
    }
    if (kind == "free_group") return Space::free_group(static_cast<int>(keys.generators.value_or(2)), mw);
    if (kind == "dihedral") return Space::dihedral_infinity(mw);
    if (kind == "z_disjoint_z") {
        return Space::disjoint_union(Space::zn(1, GridMetric::LInf, mw), Space::zn(1, GridMetric::LInf, mw));
    }
    throw CoarseError(ErrorCode::UnsupportedKind, "unknown space kind `" + kind + "`");
}

Command parse_command(const std::string& value, int line, int col,
                      const std::vector<std::pair<std::string, Subspace>>& subspaces,
                      const std::vector<std::pair<std::string, MapTable>>& maps) {
    Command cmd;
    cmd.text = value;

    auto known_subspace = [&subspaces](const std::string& n) {
        if (n == "all") return true;
        return std::any_of(subspaces.begin(), subspaces.end(), [&n](const auto& p) { return p.first == n; });
    };
    auto require_subspace = [&known_subspace](const std::string& n) {
        if (!known_subspace(n)) throw CoarseError(ErrorCode::UnknownName, "unknown subspace `" + n + "`");
        return n;
    };
    auto require_map = [&maps](const std::string& n) {
        if (!std::any_of(maps.begin(), maps.end(), [&n](const auto& p) { return p.first == n; })) {
            throw CoarseError(ErrorCode::UnknownName, "unknown map `" + n + "`");
        }
        return n;
    };

    std::vector<std::string> tokens = split_tokens(value);
    if (tokens.empty()) syntax_error(line, col, "empty command");
    const std::string& word = tokens[0];
    std::vector<std::string> args(tokens.begin() + 1, tokens.end());

    auto arity = [&](std::size_t n, const char* what) {
        if (args.size() != n) syntax_error(line, col, std::string(word) + " expects " + what);
    };

    if (word == "ends" || word == "bounded") {
        cmd.kind = word == "ends" ? CommandKind::Ends : CommandKind::Bounded;
        if (args.size() > 1) syntax_error(line, col, word + " expects at most one subspace");
        cmd.subspace_args.push_back(require_subspace(args.empty() ? "all" : args[0]));
        return cmd;
    }
    if (word == "cover" || word == "cohomology") {
        cmd.kind = word == "cover" ? CommandKind::Cover : CommandKind::Cohomology;
        if (args.empty()) {
            cmd.subspace_args.push_back("all");
            return cmd;
        }
        for (const std::string& a : args) cmd.subspace_args.push_back(require_subspace(a));
        return cmd;
    }
    if (word == "mv") {
        cmd.kind = CommandKind::MayerVietoris;
        arity(3, "a target and two pieces");
        for (const std::string& a : args) cmd.subspace_args.push_back(require_subspace(a));
        return cmd;
    }
    if (word == "refine") {
        cmd.kind = CommandKind::Refine;
        // refine <target> | <fine...> | <coarse...>
        std::vector<std::vector<std::string>> groups(1);
        for (const std::string& a : args) {
            if (a == "|") {
                groups.emplace_back();
            } else {
                groups.back().push_back(a);
            }
        }
        if (groups.size() != 3 || groups[0].size() != 1 || groups[1].empty() || groups[2].empty()) {
            syntax_error(line, col, "refine expects `<target> | <fine...> | <coarse...>`");
        }
        cmd.subspace_args.push_back(require_subspace(groups[0][0]));
        for (const std::string& a : groups[1]) cmd.subspace_args.push_back(require_subspace(a));
        cmd.fine_count = static_cast<int>(groups[1].size());
        for (const std::string& a : groups[2]) cmd.subspace_args.push_back(require_subspace(a));
        return cmd;
    }
    if (word == "flasque" || word == "coarse_map" || word == "surjective") {
        cmd.kind = word == "flasque"  ? CommandKind::Flasque
                   : word == "surjective" ? CommandKind::Surjective
                                          : CommandKind::CoarseMap;
        arity(1, "one map");
        cmd.map_args.push_back(require_map(args[0]));
        return cmd;
    }
    if (word == "close") {
        cmd.kind = CommandKind::Close;
        arity(2, "two maps");
        cmd.map_args.push_back(require_map(args[0]));
        cmd.map_args.push_back(require_map(args[1]));
        return cmd;
    }
    throw CoarseError(ErrorCode::UnknownCommand, "unknown command `" + word + "`");
}

MapTable build_map(const Space& space, const MapDef& def, int default_window) {
    const int window = static_cast<int>(def.window.value_or(default_window));
    const std::string& f = def.formula;
    std::size_t paren = f.find('(');
    std::string head = paren == std::string::npos ? f : f.substr(0, paren);
    while (!head.empty() && (head.back() == ' ' || head.back() == '\t')) head.pop_back();
    std::vector<std::string> args;
    if (paren != std::string::npos) {
        std::size_t close = f.rfind(')');
        if (close == std::string::npos || close < paren) syntax_error(def.line, def.col, "missing `)`");
        args = split_tokens(f.substr(paren + 1, close - paren - 1));
    }
    auto arg_int = [&def, &args](std::size_t i) {
        if (i >= args.size()) syntax_error(def.line, def.col, "missing map argument");
        return parse_integer(args[i], def.line, def.col);
    };
    if (head == "identity") return MapTable::identity(space, window);
    if (head == "shift") {
        if (args.size() != 1) syntax_error(def.line, def.col, "shift expects one offset");
        return MapTable::shift_line(space, arg_int(0), window);
    }
    if (head == "affine") {
        if (args.size() != 2) syntax_error(def.line, def.col, "affine expects a scale and an offset");
        return MapTable::affine_line(space, space, arg_int(0), arg_int(1), window);
    }
    if (head == "grid_shift") {
        if (args.empty()) syntax_error(def.line, def.col, "grid_shift expects one offset per axis");
        std::vector<int> delta;
        for (std::size_t i = 0; i < args.size(); ++i) delta.push_back(static_cast<int>(arg_int(i)));
        return MapTable::grid_shift(space, delta, window);
    }
    syntax_error(def.line, def.col, "unknown map formula `" + head + "`");
}

}  // namespace

const Subspace& JobConfig::subspace(const std::string& name) const {
    for (const auto& [n, sub] : subspaces) {
        if (n == name) return sub;
    }
    throw CoarseError(ErrorCode::UnknownName, "unknown subspace `" + name + "`");
}

const MapTable& JobConfig::map(const std::string& name) const {
    for (const auto& [n, m] : maps) {
        if (n == name) return m;
    }
    throw CoarseError(ErrorCode::UnknownName, "unknown map `" + name + "`");
}

JobConfig parse_config(const std::string& text) { return parse_config(text, {}); }

JobConfig parse_config(const std::string& text, const ConfigOverrides& overrides) {
    std::vector<RawLine> lines = split_lines(text);

    SpaceKeys space_keys;
    JobParams params;
    bool saw_window = false, saw_scales = false, saw_seed = false, saw_cap = false, saw_horizon = false,
         saw_coeff = false;
    std::vector<RawLine> subspace_lines;
    std::vector<MapDef> map_defs;
    std::vector<RawLine> command_lines;

    for (const RawLine& raw : lines) {
        const std::string& section = raw.path[0];
        auto key_col = [&raw]() { return 1; };

        if (section == "space") {
            if (raw.path.size() != 2) syntax_error(raw.line, key_col(), "space keys are `space.<key>`");
            const std::string& key = raw.path[1];
            if (key == "kind") {
                if (!space_keys.kind.empty()) syntax_error(raw.line, key_col(), "duplicate key space.kind");
                space_keys.kind = raw.value;
                space_keys.kind_line = raw.line;
                space_keys.kind_col = raw.value_col;
            } else if (key == "dim") {
                if (space_keys.dim) syntax_error(raw.line, key_col(), "duplicate key space.dim");
                space_keys.dim = parse_integer(raw.value, raw.line, raw.value_col);
            } else if (key == "generators") {
                if (space_keys.generators) syntax_error(raw.line, key_col(), "duplicate key space.generators");
                space_keys.generators = parse_integer(raw.value, raw.line, raw.value_col);
            } else if (key == "max_window") {
                if (space_keys.max_window) syntax_error(raw.line, key_col(), "duplicate key space.max_window");
                space_keys.max_window = parse_integer(raw.value, raw.line, raw.value_col);
            } else if (key == "metric") {
                if (!space_keys.metric.empty()) syntax_error(raw.line, key_col(), "duplicate key space.metric");
                space_keys.metric = raw.value;
                space_keys.metric_line = raw.line;
                space_keys.metric_col = raw.value_col;
            } else {
                syntax_error(raw.line, key_col(), "unknown space key `" + key + "`");
            }
        } else if (section == "subspace") {
            if (raw.path.size() != 2) syntax_error(raw.line, key_col(), "subspace keys are `subspace.<name>`");
            subspace_lines.push_back(raw);
        } else if (section == "map") {
            if (raw.path.size() == 2) {
                MapDef def;
                def.name = raw.path[1];
                def.formula = raw.value;
                def.line = raw.line;
                def.col = raw.value_col;
                for (const MapDef& prev : map_defs) {
                    if (prev.name == def.name) {
                        throw CoarseError(ErrorCode::DuplicateName, "duplicate map `" + def.name + "`");
                    }
                }
                map_defs.push_back(std::move(def));
            } else if (raw.path.size() == 3 && raw.path[2] == "window") {
                auto it = std::find_if(map_defs.begin(), map_defs.end(),
                                       [&raw](const MapDef& d) { return d.name == raw.path[1]; });
                if (it == map_defs.end()) {
                    throw CoarseError(ErrorCode::UnknownName, "unknown map `" + raw.path[1] + "`");
                }
                it->window = parse_integer(raw.value, raw.line, raw.value_col);
            } else {
                syntax_error(raw.line, key_col(), "map keys are `map.<name>` or `map.<name>.window`");
            }
        } else if (section == "params") {
            if (raw.path.size() != 2) syntax_error(raw.line, key_col(), "params keys are `params.<key>`");
            const std::string& key = raw.path[1];
            auto once = [&raw](bool& seen, const char* name) {
                if (seen) syntax_error(raw.line, 1, std::string("duplicate key params.") + name);
                seen = true;
            };
            if (key == "window") {
                once(saw_window, "window");
                params.window = static_cast<int>(parse_integer(raw.value, raw.line, raw.value_col));
            } else if (key == "scales") {
                once(saw_scales, "scales");
                params.scales.clear();
                for (const std::string& t : split_tokens(raw.value)) {
                    params.scales.push_back(static_cast<int>(parse_integer(t, raw.line, raw.value_col)));
                }
                if (params.scales.empty()) syntax_error(raw.line, raw.value_col, "scales must list at least one scale");
            } else if (key == "seed") {
                once(saw_seed, "seed");
                params.seed = static_cast<unsigned>(parse_integer(raw.value, raw.line, raw.value_col));
            } else if (key == "cap") {
                once(saw_cap, "cap");
                params.cap = static_cast<int>(parse_integer(raw.value, raw.line, raw.value_col));
            } else if (key == "horizon") {
                once(saw_horizon, "horizon");
                params.horizon = static_cast<int>(parse_integer(raw.value, raw.line, raw.value_col));
            } else if (key == "coeff") {
                once(saw_coeff, "coeff");
                try {
                    params.coeff = parse_group(raw.value);
                } catch (const std::exception& e) {
                    syntax_error(raw.line, raw.value_col, std::string("bad coefficient group: ") + e.what());
                }
            } else {
                syntax_error(raw.line, key_col(), "unknown params key `" + key + "`");
            }
        } else if (section == "run") {
            if (raw.path.size() != 2 || raw.path[1] != "command") {
                syntax_error(raw.line, key_col(), "run keys are `run.command`");
            }
            command_lines.push_back(raw);
        } else {
            syntax_error(raw.line, key_col(), "unknown section `" + section + "`");
        }
    }

    if (overrides.window) params.window = *overrides.window;
    if (overrides.seed) params.seed = *overrides.seed;

    if (space_keys.kind.empty()) {
        throw CoarseError(ErrorCode::SyntaxError, "space.kind is required");
    }
    if (params.window < 4) out_of_range("params.window must be at least 4");
    for (int r : params.scales) {
        if (r < 0) out_of_range("scales must be nonnegative");
    }
    if (params.cap < 1) out_of_range("params.cap must be positive");
    if (params.horizon < 1) out_of_range("params.horizon must be positive");
    if (space_keys.dim && (*space_keys.dim < 1 || *space_keys.dim > 8)) {
        out_of_range("space.dim must be between 1 and 8");
    }
    if (space_keys.generators && (*space_keys.generators < 1 || *space_keys.generators > 8)) {
        out_of_range("space.generators must be between 1 and 8");
    }

    int max_scale = *std::max_element(params.scales.begin(), params.scales.end());
    long long default_mw = params.window + std::max(params.window / 4, 2 * max_scale) + 8;
    if (!map_defs.empty()) default_mw = std::max(default_mw, static_cast<long long>(params.window) + params.horizon + 24);
    long long mw = space_keys.max_window.value_or(default_mw);
    if (mw < params.window) out_of_range("space.max_window is smaller than the window");
    if (space_point_estimate(space_keys.kind, space_keys.dim.value_or(1), space_keys.generators.value_or(2), mw) >
        100000000) {
        out_of_range("space too large for the declared max_window");
    }

    Space space = build_space(space_keys, mw);

    JobConfig cfg{std::move(space), {}, {}, params, {}};
    cfg.subspaces.emplace_back("all", Subspace::all(cfg.space));

    for (const RawLine& raw : subspace_lines) {
        const std::string& name = raw.path[1];
        if (name == "all" ||
            std::any_of(cfg.subspaces.begin(), cfg.subspaces.end(),
                        [&name](const auto& p) { return p.first == name; })) {
            throw CoarseError(ErrorCode::DuplicateName, "duplicate subspace `" + name + "`");
        }
        ExprParser parser(cfg.space, cfg.subspaces, raw.value, raw.line, raw.value_col);
        cfg.subspaces.emplace_back(name, parser.parse());
    }

    const int default_map_window = params.window + params.horizon + 8;
    for (const MapDef& def : map_defs) {
        if (def.window && (*def.window < 1 || *def.window > mw)) {
            out_of_range("map window for `" + def.name + "` is outside the space");
        }
        cfg.maps.emplace_back(def.name, build_map(cfg.space, def, default_map_window));
    }

    for (const RawLine& raw : command_lines) {
        cfg.commands.push_back(parse_command(raw.value, raw.line, raw.value_col, cfg.subspaces, cfg.maps));
    }
    if (cfg.commands.empty()) {
        throw CoarseError(ErrorCode::SyntaxError, "run.command is required");
    }
    return cfg;
}

}  // namespace coarse
