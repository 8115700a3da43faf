#include "tilt/automata.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace tilt {

int SemiAutomaton::run(int q, const Word& w) const {
    for (int a : w) q = delta[a][q];
    return q;
}

std::vector<int> SemiAutomaton::image(const std::vector<int>& states, const Word& w) const {
    std::vector<int> r;
    r.reserve(states.size());
    for (int q : states) r.push_back(run(q, w));
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::string SemiAutomaton::word_string(const Word& w) const {
    bool single = std::all_of(letters.begin(), letters.end(), [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!single && i) out += ' ';
        out += letters[w[i]];
    }
    return out;
}

int SemiAutomaton::letter_index(const std::string& name) const {
    for (int a = 0; a < k(); ++a)
        if (letters[a] == name) return a;
    return -1;
}

Word SemiAutomaton::parse_word(const std::string& s) const {
    Word w;
    std::istringstream is(s);
    std::string tok;
    bool spaced = s.find(' ') != std::string::npos;
    if (spaced) {
        while (is >> tok) {
            int a = letter_index(tok);
            if (a < 0) throw Error(ErrorKind::ParseError, "unknown letter '" + tok + "'");
            w.push_back(a);
        }
        return w;
    }
    for (char c : s) {
        int a = letter_index(std::string(1, c));
        if (a < 0) throw Error(ErrorKind::ParseError, std::string("unknown letter '") + c + "'");
        w.push_back(a);
    }
    return w;
}

bool Acceptor::is_accepting(int q) const {
    return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

bool Acceptor::accepts(const Word& w) const { return is_accepting(a.run(initial, w)); }

SemiAutomaton make_automaton(int n, std::vector<std::string> letters) {
    SemiAutomaton A;
    A.n = n;
    A.letters = std::move(letters);
    A.delta.assign(A.letters.size(), std::vector<int>(n));
    for (auto& d : A.delta) std::iota(d.begin(), d.end(), 0);
    return A;
}

// ---- tilt automata ----

int TiltAutomaton::state_of(Pixel p) const {
    auto it = std::lower_bound(pixels.begin(), pixels.end(), p);
    if (it == pixels.end() || *it != p) return -1;
    return static_cast<int>(it - pixels.begin());
}

Word word_from_moves(const std::string& moves) {
    Word w;
    for (char c : moves) w.push_back(static_cast<int>(dir_from_char(c)));
    return w;
}

std::string moves_from_word(const Word& w) {
    std::string s;
    for (int a : w) s += dir_char(static_cast<Dir>(a));
    return s;
}

static std::vector<std::string> dir_letters() { return {"U", "D", "L", "R"}; }

TiltAutomaton build_tilt_automaton(const BoundaryIndex& bi) {
    SignificantPixelSet S = significant_pixels(bi);
    TiltAutomaton T;
    T.pixels = S.all;
    T.a = make_automaton(static_cast<int>(S.all.size()), dir_letters());
    T.helper.assign(S.all.size(), false);
    for (size_t i = 0; i < S.all.size(); ++i) {
        T.helper[i] = S.is_helper(S.all[i]);
        T.a.labels.push_back(std::to_string(S.all[i].x) + "," + std::to_string(S.all[i].y));
    }
    for (Dir d : kDirs) {
        for (size_t i = 0; i < S.all.size(); ++i) {
            int j = T.state_of(bi.project(S.all[i], d));
            if (j < 0) throw Error(ErrorKind::VerificationFailed, "significant pixels not closed under a move");
            T.a.delta[static_cast<int>(d)][i] = j;
        }
    }
    return T;
}

TiltAutomaton build_tilt_automaton(const Boundary& b) { return build_tilt_automaton(BoundaryIndex(b)); }

TiltAutomaton build_s1_automaton(const Polyomino& P) {
    TiltAutomaton T;
    T.pixels = P.pixels();
    T.helper.assign(P.size(), false);
    T.a = make_automaton(P.size(), dir_letters());
    for (Dir d : kDirs)
        for (int i = 0; i < P.size(); ++i) T.a.delta[static_cast<int>(d)][i] = singleton_move(P, i, d, Model::S1);
    return T;
}

// ---- pair automaton ----

Word PairAutomaton::merging_word(int p, int q) const {
    Word w;
    int s = index(p, q);
    if (dist[s] < 0) return w;
    while (first[s] != second[s]) {
        w.push_back(letter[s]);
        s = parent[s];
    }
    return w;
}

PairAutomaton pair_automaton(const SemiAutomaton& A) {
    PairAutomaton pa;
    int n = pa.n = A.n;
    int m = pa.size();
    pa.first.resize(m);
    pa.second.resize(m);
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            int s = pa.index(p, q);
            pa.first[s] = p;
            pa.second[s] = q;
        }
    // reversed edges in CSR form
    int k = A.k();
    std::vector<int> img(static_cast<size_t>(m) * k);
    std::vector<int> cnt(m + 1, 0);
    for (int s = 0; s < m; ++s)
        for (int a = 0; a < k; ++a) {
            int t = pa.index(A.delta[a][pa.first[s]], A.delta[a][pa.second[s]]);
            img[static_cast<size_t>(s) * k + a] = t;
            ++cnt[t + 1];
        }
    for (int t = 0; t < m; ++t) cnt[t + 1] += cnt[t];
    std::vector<int> rev(static_cast<size_t>(m) * k);
    std::vector<int> fill(cnt.begin(), cnt.end() - 1);
    for (int s = 0; s < m; ++s)
        for (int a = 0; a < k; ++a) {
            int t = img[static_cast<size_t>(s) * k + a];
            rev[fill[t]++] = s * k + a;
        }
    pa.dist.assign(m, -1);
    pa.letter.assign(m, -1);
    pa.parent.assign(m, -1);
    std::vector<int> queue;
    queue.reserve(m);
    for (int p = 0; p < n; ++p) {
        int s = pa.index(p, p);
        pa.dist[s] = 0;
        queue.push_back(s);
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        int t = queue[h];
        for (int e = cnt[t]; e < cnt[t + 1]; ++e) {
            int s = rev[e] / k, a = rev[e] % k;
            if (pa.dist[s] >= 0) continue;
            pa.dist[s] = pa.dist[t] + 1;
            pa.letter[s] = a;
            pa.parent[s] = t;
            queue.push_back(s);
        }
    }
    return pa;
}

bool is_synchronizing(const PairAutomaton& pa) {
    return std::all_of(pa.dist.begin(), pa.dist.end(), [](int d) { return d >= 0; });
}

bool is_synchronizing(const SemiAutomaton& A) {
    if (A.n <= 1) return true;
    return is_synchronizing(pair_automaton(A));
}

std::optional<Word> greedy_merge(const SemiAutomaton& A, const PairAutomaton& pa, std::vector<int> X,
                                 std::vector<int>* finalState) {
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    Word w;
    while (X.size() > 1) {
        int best = -1, bp = -1, bq = -1;
        for (size_t i = 0; i < X.size(); ++i)
            for (size_t j = i + 1; j < X.size(); ++j) {
                int d = pa.distance(X[i], X[j]);
                if (d < 0) return std::nullopt;
                if (best < 0 || d < best) best = d, bp = X[i], bq = X[j];
            }
        Word u = pa.merging_word(bp, bq);
        w.insert(w.end(), u.begin(), u.end());
        X = A.image(X, u);
    }
    if (finalState) *finalState = X;
    return w;
}

std::optional<Word> synchronizing_word(const SemiAutomaton& A) {
    if (A.n <= 1) return Word{};
    PairAutomaton pa = pair_automaton(A);
    std::vector<int> all(A.n);
    std::iota(all.begin(), all.end(), 0);
    auto w = greedy_merge(A, pa, all);
    if (w && A.image(all, *w).size() != 1) throw Error(ErrorKind::VerificationFailed, "greedy word does not synchronize");
    return w;
}

// ---- subset BFS ----

namespace {

struct SubsetStore {
    int W;
    std::vector<std::uint64_t> arena;
    std::uint64_t* at(int id) { return arena.data() + static_cast<size_t>(id) * W; }
    const std::uint64_t* at(int id) const { return arena.data() + static_cast<size_t>(id) * W; }
};

struct SubsetHash {
    const SubsetStore* st;
    size_t operator()(int id) const {
        const std::uint64_t* p = st->at(id);
        std::uint64_t h = 1469598103934665603ULL;
        for (int i = 0; i < st->W; ++i) {
            h ^= p[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

struct SubsetEq {
    const SubsetStore* st;
    bool operator()(int a, int b) const { return std::equal(st->at(a), st->at(a) + st->W, st->at(b)); }
};

}  // namespace

std::optional<ResetResult> reset_threshold_exact(const SemiAutomaton& A, const std::vector<int>& S, long long budget) {
    std::vector<int> start(S);
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    if (start.empty()) throw Error(ErrorKind::ParseError, "subset must be nonempty");
    if (start.size() == 1) return ResetResult{};
    SubsetStore st;
    st.W = (A.n + 63) / 64;
    std::vector<int> parent, letter;
    std::unordered_set<int, SubsetHash, SubsetEq> seen(1024, SubsetHash{&st}, SubsetEq{&st});
    auto push = [&](const std::vector<std::uint64_t>& bits, int par, int a) {
        int id = static_cast<int>(parent.size());
        st.arena.insert(st.arena.end(), bits.begin(), bits.end());
        parent.push_back(par);
        letter.push_back(a);
        if (!seen.insert(id).second) {
            st.arena.resize(st.arena.size() - st.W);
            parent.pop_back();
            letter.pop_back();
            return -1;
        }
        return id;
    };
    std::vector<std::uint64_t> bits(st.W, 0);
    for (int q : start) bits[q >> 6] |= std::uint64_t{1} << (q & 63);
    push(bits, -1, -1);
    for (size_t h = 0; h < parent.size(); ++h) {
        for (int a = 0; a < A.k(); ++a) {
            std::fill(bits.begin(), bits.end(), 0);
            const std::uint64_t* src = st.at(static_cast<int>(h));
            int pop = 0;
            for (int wi = 0; wi < st.W; ++wi) {
                std::uint64_t x = src[wi];
                while (x) {
                    int q = wi * 64 + std::countr_zero(x);
                    x &= x - 1;
                    int r = A.delta[a][q];
                    std::uint64_t bit = std::uint64_t{1} << (r & 63);
                    if (!(bits[r >> 6] & bit)) {
                        bits[r >> 6] |= bit;
                        ++pop;
                    }
                }
            }
            int id = push(bits, static_cast<int>(h), a);
            if (id < 0) continue;
            if (pop == 1) {
                ResetResult res;
                for (int c = id; parent[c] >= 0; c = parent[c]) res.word.push_back(letter[c]);
                std::reverse(res.word.begin(), res.word.end());
                res.length = static_cast<int>(res.word.size());
                return res;
            }
            if (static_cast<long long>(parent.size()) > budget)
                throw Error(ErrorKind::BudgetExceeded, "subset search visited more than " + std::to_string(budget) + " sets");
        }
    }
    return std::nullopt;
}

// ---- tally automata ----

bool TallyAutomaton::is_accepting(int j) const {
    return std::find(accepting.begin(), accepting.end(), j) != accepting.end();
}

bool TallyAutomaton::accepts_length(long long l) const { return is_accepting(static_cast<int>((initial + l) % rho)); }

Acceptor TallyAutomaton::acceptor() const {
    Acceptor acc;
    acc.a = make_automaton(rho, {"0"});
    for (int j = 0; j < rho; ++j) acc.a.delta[0][j] = (j + 1) % rho;
    acc.initial = initial;
    acc.accepting = accepting;
    return acc;
}

TallyAutomaton tally_cycle(int rho, std::vector<int> accepting, int initial) {
    if (rho <= 1 || rho % 2 == 0) throw Error(ErrorKind::InvalidTallyShape, "cycle length must be odd and > 1");
    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
    for (int f : accepting)
        if (f < 0 || f >= rho) throw Error(ErrorKind::InvalidTallyShape, "accepting state out of range");
    if (static_cast<int>(accepting.size()) == rho) throw Error(ErrorKind::InvalidTallyShape, "all states accepting");
    if (!accepting.empty() && accepting.front() == 0) throw Error(ErrorKind::InvalidTallyShape, "state 0 must reject");
    if (initial < 0 || initial >= rho) throw Error(ErrorKind::InvalidTallyShape, "initial state out of range");
    return TallyAutomaton{rho, accepting, initial};
}

TallyAutomaton tally_renumbered(int rho, std::vector<int> accepting, int initial) {
    if (rho <= 1 || rho % 2 == 0) throw Error(ErrorKind::InvalidTallyShape, "cycle length must be odd and > 1");
    std::vector<bool> acc(rho, false);
    for (int f : accepting) {
        if (f < 0 || f >= rho) throw Error(ErrorKind::InvalidTallyShape, "accepting state out of range");
        acc[f] = true;
    }
    int shift = -1;
    for (int j = 0; j < rho && shift < 0; ++j)
        if (!acc[j]) shift = j;
    if (shift < 0) throw Error(ErrorKind::InvalidTallyShape, "all states accepting");
    std::vector<int> f2;
    for (int j = 0; j < rho; ++j)
        if (acc[j]) f2.push_back(((j - shift) % rho + rho) % rho);
    return tally_cycle(rho, f2, ((initial - shift) % rho + rho) % rho);
}

std::optional<long long> tally_intersection_scan(const std::vector<TallyAutomaton>& as, long long bound) {
    for (long long l = 0; l <= bound; ++l) {
        bool ok = true;
        for (const auto& t : as)
            if (!t.accepts_length(l)) {
                ok = false;
                break;
            }
        if (ok) return l;
    }
    return std::nullopt;
}

namespace {

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

std::optional<long long> tally_intersection_smallest(const std::vector<TallyAutomaton>& as, long long bound) {
    if (as.empty()) return std::nullopt;
    bool single = std::all_of(as.begin(), as.end(), [](const TallyAutomaton& t) { return t.accepting.size() == 1; });
    if (!single) return tally_intersection_scan(as, bound);
    // l = r (mod m) combined by the generalized Chinese remainder theorem
    __int128 r = 0, m = 1;
    for (const auto& t : as) {
        long long ri = ((t.accepting[0] - t.initial) % t.rho + t.rho) % t.rho;
        long long x, y;
        long long g = ext_gcd(static_cast<long long>(m % t.rho), t.rho, x, y);
        long long diff = static_cast<long long>((ri - r) % t.rho);
        if (diff < 0) diff += t.rho;
        if (diff % g) return std::nullopt;
        __int128 mod = t.rho / g;
        __int128 k = (static_cast<__int128>(diff / g) * x) % mod;
        if (k < 0) k += mod;
        r += m * k;
        m *= mod;
        r %= m;
        if (m > static_cast<__int128>(1) << 62) return tally_intersection_scan(as, bound);
    }
    long long l = static_cast<long long>(r);
    if (l > bound) return std::nullopt;
    return l;
}

// ---- Eulerian report ----

EulerianReport check_eulerian_bound(const SemiAutomaton& A, long long budget) {
    EulerianReport rep;
    std::vector<int> indeg(A.n, 0);
    for (const auto& d : A.delta)
        for (int q : d) ++indeg[q];
    rep.eulerian = std::all_of(indeg.begin(), indeg.end(), [&](int c) { return c == A.k(); });
    long long n = A.n;
    rep.kariBound = (n - 2) * (n - 1) + 1;
    std::vector<int> all(A.n);
    std::iota(all.begin(), all.end(), 0);
    try {
        auto rt = reset_threshold_exact(A, all, budget);
        rep.synchronizing = rt.has_value();
        if (rt) {
            rep.witnessLength = rt->length;
            rep.exact = true;
        }
    } catch (const Error& e) {
        if (e.kind != ErrorKind::BudgetExceeded) throw;
        auto w = synchronizing_word(A);
        rep.synchronizing = w.has_value();
        if (w) rep.witnessLength = static_cast<long long>(w->size());
    }
    rep.withinBound = rep.synchronizing && (n <= 1 ? rep.witnessLength == 0 : rep.witnessLength <= rep.kariBound);
    return rep;
}

// ---- text format ----

std::string format_automaton(const Acceptor& acc, bool withAcceptor) {
    const SemiAutomaton& A = acc.a;
    std::ostringstream os;
    os << "states: " << A.n << "\n";
    os << "alphabet: ";
    for (int a = 0; a < A.k(); ++a) os << (a ? "," : "") << A.letters[a];
    os << "\n";
    if (withAcceptor) {
        os << "initial: " << acc.initial << "\n";
        os << "accepting: ";
        for (size_t i = 0; i < acc.accepting.size(); ++i) os << (i ? "," : "") << acc.accepting[i];
        os << "\n";
    }
    for (int q = 0; q < A.n; ++q)
        for (int a = 0; a < A.k(); ++a) os << q << " " << A.letters[a] << " " << A.delta[a][q] << "\n";
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

int to_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "expected integer, got '" + s + "'");
    }
}

}  // namespace

Acceptor parse_automaton(const std::string& text) {
    Acceptor acc;
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::vector<std::string> letters;
    std::vector<std::array<std::string, 3>> body;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon != std::string::npos) {
            std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
            if (key == "states") n = to_int(val);
            else if (key == "alphabet") letters = split(val, ',');
            else if (key == "initial") acc.initial = to_int(val);
            else if (key == "accepting") {
                for (auto& s : split(val, ','))
                    if (!s.empty()) acc.accepting.push_back(to_int(s));
            } else
                throw Error(ErrorKind::ParseError, "unknown header '" + key + "'");
            continue;
        }
        std::istringstream ls(line);
        std::array<std::string, 3> t;
        if (!(ls >> t[0] >> t[1] >> t[2])) throw Error(ErrorKind::ParseError, "bad transition line '" + line + "'");
        body.push_back(t);
    }
    if (n <= 0) throw Error(ErrorKind::ParseError, "missing or invalid 'states:'");
    if (letters.empty()) throw Error(ErrorKind::ParseError, "missing 'alphabet:'");
    acc.a = make_automaton(n, letters);
    std::vector<std::vector<bool>> set(letters.size(), std::vector<bool>(n, false));
    for (auto& t : body) {
        int src = to_int(t[0]), dst = to_int(t[2]);
        int a = acc.a.letter_index(t[1]);
        if (a < 0) throw Error(ErrorKind::ParseError, "unknown letter '" + t[1] + "'");
        if (src < 0 || src >= n || dst < 0 || dst >= n) throw Error(ErrorKind::ParseError, "state out of range");
        acc.a.delta[a][src] = dst;
        set[a][src] = true;
    }
    for (auto& row : set)
        for (bool b : row)
            if (!b) throw Error(ErrorKind::ParseError, "transition function is not total");
    if (acc.initial < 0 || acc.initial >= n) throw Error(ErrorKind::ParseError, "initial state out of range");
    for (int f : acc.accepting)
        if (f < 0 || f >= n) throw Error(ErrorKind::ParseError, "accepting state out of range");
    return acc;
}

}  // namespace tilt
