#include "tdl/braid.hpp"

#include <numeric>
#include <regex>
#include <sstream>

#include <omp.h>

namespace tdl {
namespace {

int wrap(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<int> dims_of(const TwistedDouble& theory, const std::vector<int>& colors) {
    std::vector<int> dims;
    for (int c : colors) dims.push_back(theory.qdim(c));
    return dims;
}

std::size_t volume(const std::vector<int>& dims) {
    std::size_t v = 1;
    for (int d : dims) v *= static_cast<std::size_t>(d);
    return v;
}

void decode(std::size_t index, const std::vector<int>& dims, std::vector<int>& state) {
    for (std::size_t j = dims.size(); j-- > 0;) {
        state[j] = static_cast<int>(index % dims[j]);
        index /= dims[j];
    }
}

std::size_t encode(const std::vector<int>& state, const std::vector<int>& dims) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) index = index * dims[j] + state[j];
    return index;
}

// Colors at the crossing positions for every letter, computed once per word.
struct Schedule {
    struct Step {
        int pos;
        int sign;
        int left;
        int right;
    };
    std::vector<Step> steps;
    std::vector<int> bottom_colors;
};

Schedule schedule(const ColoredBraid& colored) {
    Schedule s;
    std::vector<int> colors = colored.top_colors;
    for (int letter : colored.word.letters) {
        const int i = std::abs(letter) - 1;
        s.steps.push_back({i, letter > 0 ? 1 : -1, colors[i], colors[i + 1]});
        std::swap(colors[i], colors[i + 1]);
    }
    s.bottom_colors = std::move(colors);
    return s;
}

// Runs the word on one basis state in place and returns the accumulated phase.
int run_word(const TwistedDouble& theory, const Schedule& sched, const std::vector<int>& top_colors,
             std::vector<int>& state, std::vector<int>& colors) {
    const Group& group = theory.group();
    const int big = theory.phase_order();
    colors = top_colors;
    long long phase = 0;
    for (const auto& st : sched.steps) {
        int F = group.identity();
        for (int j = 0; j < st.pos; ++j) F = group.mul(F, theory.flux(colors[j], state[j]));
        const int fl = theory.flux(st.left, state[st.pos]);
        const int fr = theory.flux(st.right, state[st.pos + 1]);
        phase += theory.associator_exponent(F, fl, fr);
        const PairMove mv = st.sign > 0
                                ? theory.sigma_action(st.left, st.right, state[st.pos], state[st.pos + 1])
                                : theory.sigma_inverse_action(st.left, st.right, state[st.pos], state[st.pos + 1]);
        state[st.pos] = mv.left;
        state[st.pos + 1] = mv.right;
        std::swap(colors[st.pos], colors[st.pos + 1]);
        phase += mv.phase;
        const int gl = theory.flux(colors[st.pos], state[st.pos]);
        const int gr = theory.flux(colors[st.pos + 1], state[st.pos + 1]);
        phase -= theory.associator_exponent(F, gl, gr);
    }
    return wrap(phase, big);
}

void check_word(const BraidWord& word) {
    if (word.strands < 1) throw BraidParseError("a braid needs at least one strand");
    for (int letter : word.letters)
        if (letter == 0 || std::abs(letter) >= word.strands)
            throw BraidParseError("generator " + std::to_string(letter) + " out of range for " +
                                  std::to_string(word.strands) + " strands");
}

}  // namespace

int BraidWord::writhe() const {
    int w = 0;
    for (int letter : letters) w += letter > 0 ? 1 : -1;
    return w;
}

BraidWord BraidWord::inverse() const {
    BraidWord out{strands, {}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

BraidWord parse_braid(std::string_view text, int strands) {
    BraidWord word{strands, {}};
    std::string s(text);
    const auto first = s.find_first_not_of(" \t\n");
    if (first != std::string::npos && s[first] == '[') {
        const auto last = s.find_last_of(']');
        if (last == std::string::npos) throw BraidParseError("unterminated braid array");
        std::string body = s.substr(first + 1, last - first - 1);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream in(body);
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw BraidParseError("malformed braid entry '" + tok + "'");
            }
            if (used != tok.size()) throw BraidParseError("malformed braid entry '" + tok + "'");
            word.letters.push_back(v);
        }
        check_word(word);
        return word;
    }
    static const std::regex token(R"(^s(\d+)(?:\^(-?\d+))?$)");
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        std::smatch m;
        if (!std::regex_match(tok, m, token)) throw BraidParseError("malformed braid token '" + tok + "'");
        const int gen = std::stoi(m[1].str());
        const int e = m[2].matched ? std::stoi(m[2].str()) : 1;
        if (e == 0) throw BraidParseError("zero exponent in token '" + tok + "'");
        for (int k = 0; k < std::abs(e); ++k) word.letters.push_back(e > 0 ? gen : -gen);
    }
    check_word(word);
    return word;
}

std::string format_braid(const BraidWord& word) {
    std::ostringstream out;
    for (std::size_t i = 0; i < word.letters.size();) {
        const int gen = std::abs(word.letters[i]);
        const int sign = word.letters[i] > 0 ? 1 : -1;
        int run = 0;
        while (i < word.letters.size() && word.letters[i] == sign * gen) ++run, ++i;
        if (out.tellp() > 0) out << ' ';
        out << 's' << gen;
        if (sign * run != 1) out << '^' << sign * run;
    }
    return out.str();
}

ClosureStructure closure_structure(const BraidWord& word) {
    const int n = word.strands;
    std::vector<int> at(n);  // top strand currently occupying each position
    std::iota(at.begin(), at.end(), 0);
    for (int letter : word.letters) {
        const int i = std::abs(letter) - 1;
        std::swap(at[i], at[i + 1]);
    }
    // strand s leaves at bottom position pos, and the closure feeds it into top position pos
    std::vector<int> next(n);
    for (int pos = 0; pos < n; ++pos) next[at[pos]] = pos;

    ClosureStructure out;
    out.component_of.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (out.component_of[s] >= 0) continue;
        ClosureComponent comp;
        for (int x = s; out.component_of[x] < 0; x = next[x]) {
            out.component_of[x] = static_cast<int>(out.components.size());
            comp.strands.push_back(x);
        }
        std::sort(comp.strands.begin(), comp.strands.end());
        out.components.push_back(std::move(comp));
    }
    std::iota(at.begin(), at.end(), 0);
    for (int letter : word.letters) {
        const int i = std::abs(letter) - 1;
        const int c = out.component_of[at[i]];
        if (c == out.component_of[at[i + 1]]) out.components[c].self_writhe += letter > 0 ? 1 : -1;
        std::swap(at[i], at[i + 1]);
    }
    out.writhe = word.writhe();
    return out;
}

void validate_coloring(const TwistedDouble& theory, const ColoredBraid& colored) {
    check_word(colored.word);
    if (static_cast<int>(colored.top_colors.size()) != colored.word.strands)
        throw ColoringError("expected " + std::to_string(colored.word.strands) + " colors, got " +
                            std::to_string(colored.top_colors.size()));
    for (int c : colored.top_colors)
        if (c < 0 || c >= theory.size()) throw ColoringError("color index " + std::to_string(c) + " out of range");
    const auto cs = closure_structure(colored.word);
    for (std::size_t k = 0; k < cs.components.size(); ++k) {
        const auto& strands = cs.components[k].strands;
        for (int s : strands) {
            if (colored.top_colors[s] == colored.top_colors[strands[0]]) continue;
            std::ostringstream msg;
            msg << "component {";
            for (std::size_t j = 0; j < strands.size(); ++j) msg << (j ? "," : "") << strands[j] + 1;
            msg << "} carries different colors " << theory.object(colored.top_colors[strands[0]]).label << " and "
                << theory.object(colored.top_colors[s]).label;
            throw ColoringError(msg.str());
        }
    }
}

ColoredBraid color_by_component(const BraidWord& word, const std::vector<int>& component_colors) {
    const auto cs = closure_structure(word);
    if (component_colors.size() != cs.components.size())
        throw ColoringError("expected " + std::to_string(cs.components.size()) + " component colors");
    ColoredBraid out{word, std::vector<int>(word.strands)};
    for (int s = 0; s < word.strands; ++s) out.top_colors[s] = component_colors[cs.component_of[s]];
    return out;
}

MonomialOperator::MonomialOperator(std::vector<int> domain_dims, std::vector<int> codomain_dims, int phase_order)
    : domain_dims_(std::move(domain_dims)), codomain_dims_(std::move(codomain_dims)), phase_order_(phase_order),
      target_(volume(domain_dims_)), phase_(target_.size(), 0) {}

MonomialOperator MonomialOperator::identity(std::vector<int> dims, int phase_order) {
    MonomialOperator op(dims, dims, phase_order);
    std::iota(op.target_.begin(), op.target_.end(), 0u);
    return op;
}

void MonomialOperator::set(std::size_t i, std::uint32_t target, int phase) {
    target_.at(i) = target;
    phase_.at(i) = wrap(phase, phase_order_);
}

MonomialOperator MonomialOperator::after(const MonomialOperator& other) const {
    if (other.codomain_dims_ != domain_dims_ || other.phase_order_ != phase_order_)
        throw std::invalid_argument("operator composition: incompatible bases");
    MonomialOperator out(other.domain_dims_, codomain_dims_, phase_order_);
    for (std::size_t i = 0; i < other.size(); ++i) {
        const auto mid = other.target_[i];
        out.target_[i] = target_[mid];
        out.phase_[i] = wrap(static_cast<long long>(other.phase_[i]) + phase_[mid], phase_order_);
    }
    return out;
}

Cyclo MonomialOperator::trace() const {
    if (domain_dims_ != codomain_dims_) throw std::invalid_argument("trace of an operator between different bases");
    std::vector<std::int64_t> hist(phase_order_, 0);
    for (std::size_t i = 0; i < size(); ++i)
        if (target_[i] == i) ++hist[phase_[i]];
    return Cyclo::from_exponent_counts(hist);
}

bool MonomialOperator::is_identity() const {
    if (domain_dims_ != codomain_dims_) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (target_[i] != i || phase_[i] != 0) return false;
    return true;
}

MonomialOperator representation_operator(const TwistedDouble& theory, const ColoredBraid& colored) {
    const Schedule sched = schedule(colored);
    const auto dims = dims_of(theory, colored.top_colors);
    const auto out_dims = dims_of(theory, sched.bottom_colors);
    MonomialOperator op(dims, out_dims, theory.phase_order());
    std::vector<int> state(dims.size()), colors;
    for (std::size_t idx = 0; idx < op.size(); ++idx) {
        decode(idx, dims, state);
        const int phase = run_word(theory, sched, colored.top_colors, state, colors);
        op.set(idx, static_cast<std::uint32_t>(encode(state, out_dims)), phase);
    }
    return op;
}

std::vector<std::int64_t> trace_histogram(const TwistedDouble& theory, const ColoredBraid& colored, Kernel kernel) {
    validate_coloring(theory, colored);
    const Schedule sched = schedule(colored);
    const auto dims = dims_of(theory, colored.top_colors);
    const std::size_t total = volume(dims);
    const int big = theory.phase_order();
    std::vector<std::int64_t> hist(big, 0);

    auto sweep = [&](std::size_t begin, std::size_t end, std::int64_t step, std::vector<std::int64_t>& local) {
        std::vector<int> state(dims.size()), start(dims.size()), colors;
        for (std::size_t idx = begin; idx < end; idx += static_cast<std::size_t>(step)) {
            decode(idx, dims, start);
            state = start;
            const int phase = run_word(theory, sched, colored.top_colors, state, colors);
            if (state == start) ++local[phase];
        }
    };

    if (kernel == Kernel::Serial || total < 256) {
        sweep(0, total, 1, hist);
        return hist;
    }
#pragma omp parallel
    {
        std::vector<std::int64_t> local(big, 0);
        const auto threads = static_cast<std::size_t>(omp_get_num_threads());
        const auto me = static_cast<std::size_t>(omp_get_thread_num());
        sweep(me, total, static_cast<std::int64_t>(threads), local);
#pragma omp critical
        for (int e = 0; e < big; ++e) hist[e] += local[e];
    }
    return hist;
}

Cyclo framed_invariant(const TwistedDouble& theory, const ColoredBraid& colored, Kernel kernel) {
    return Cyclo::from_exponent_counts(trace_histogram(theory, colored, kernel));
}

Cyclo zero_framed_invariant(const TwistedDouble& theory, const ColoredBraid& colored, Kernel kernel) {
    const Cyclo framed = framed_invariant(theory, colored, kernel);
    const auto cs = closure_structure(colored.word);
    long long correction = 0;
    for (const auto& comp : cs.components)
        correction -= static_cast<long long>(comp.self_writhe) * theory.twist_exponent(colored.top_colors[comp.strands[0]]);
    return framed.times_root(wrap(correction, theory.phase_order()), static_cast<unsigned>(theory.phase_order()));
}

int total_flux(const TwistedDouble& theory, const std::vector<int>& colors, const std::vector<int>& state) {
    int F = theory.group().identity();
    for (std::size_t j = 0; j < colors.size(); ++j) F = theory.group().mul(F, theory.flux(colors[j], state[j]));
    return F;
}

}  // namespace tdl
