#include "plagdet/stemmer.hpp"

#include <cstring>

#include "plagdet/errors.hpp"

namespace plagdet {

namespace {

bool all_lower_ascii(std::string_view word) {
    for (const char c : word)
        if (c < 'a' || c > 'z') return false;
    return !word.empty();
}

// In-place Porter machinery over a [a-z] buffer. k is the index of the
// last live character, j the stem boundary set by ends().
class PorterBuffer {
  public:
    explicit PorterBuffer(std::string word)
        : b_(std::move(word)), k_(static_cast<int>(b_.size()) - 1), j_(0) {}

    std::string stem() && {
        if (k_ > 1) {  // words of length <= 2 are left alone
            step1ab();
            step1c();
            step2();
            step3();
            step4();
            step5();
        }
        b_.resize(static_cast<std::size_t>(k_) + 1);
        return std::move(b_);
    }

    int measure_whole_word() {
        j_ = k_;
        return measure();
    }

  private:
    std::string b_;
    int k_;
    int j_;

    // true if b_[i] is a consonant; 'y' counts as a vowel after a consonant
    bool cons(int i) const {
        switch (b_[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return (i == 0) ? true : !cons(i - 1);
            default:
                return true;
        }
    }

    // number of VC sequences in b_[0..j_]
    int measure() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool doublec(int idx) const {
        if (idx < 1) return false;
        if (b_[idx] != b_[idx - 1]) return false;
        return cons(idx);
    }

    // consonant-vowel-consonant ending at idx, last consonant not w/x/y
    bool cvc(int idx) const {
        if (idx < 2 || !cons(idx) || cons(idx - 1) || !cons(idx - 2)) return false;
        const char c = b_[idx];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(const char* s) {
        const int len = static_cast<int>(std::strlen(s));
        if (len > k_ + 1) return false;
        if (std::memcmp(b_.data() + k_ - len + 1, s, static_cast<std::size_t>(len)) != 0)
            return false;
        j_ = k_ - len;
        return true;
    }

    void set_to(const char* s) {
        const int len = static_cast<int>(std::strlen(s));
        b_.resize(static_cast<std::size_t>(j_ + 1 + len));
        std::memcpy(b_.data() + (j_ + 1), s, static_cast<std::size_t>(len));
        k_ = j_ + len;
    }

    void replace_if_measure(const char* s) {
        if (measure() > 0) set_to(s);
    }

    // plurals and -ed / -ing
    void step1ab() {
        if (b_[k_] == 's') {
            if (ends("sses"))
                k_ -= 2;
            else if (ends("ies"))
                set_to("i");
            else if (b_[k_ - 1] != 's')
                --k_;
        }
        if (ends("eed")) {
            if (measure() > 0) --k_;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k_ = j_;
            if (ends("at"))
                set_to("ate");
            else if (ends("bl"))
                set_to("ble");
            else if (ends("iz"))
                set_to("ize");
            else if (doublec(k_)) {
                --k_;
                const char c = b_[k_];
                if (c == 'l' || c == 's' || c == 'z') ++k_;
            } else if (measure() == 1 && cvc(k_)) {
                set_to("e");
            }
        }
    }

    // terminal y -> i when there is another vowel in the stem
    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
    }

    void step2() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
            case 'a':
                if (ends("ational")) { replace_if_measure("ate"); break; }
                if (ends("tional")) { replace_if_measure("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { replace_if_measure("ence"); break; }
                if (ends("anci")) { replace_if_measure("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { replace_if_measure("ize"); break; }
                break;
            case 'l':
                // reference variant: "bli" rather than the paper's "abli"
                if (ends("bli")) { replace_if_measure("ble"); break; }
                if (ends("alli")) { replace_if_measure("al"); break; }
                if (ends("entli")) { replace_if_measure("ent"); break; }
                if (ends("eli")) { replace_if_measure("e"); break; }
                if (ends("ousli")) { replace_if_measure("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { replace_if_measure("ize"); break; }
                if (ends("ation")) { replace_if_measure("ate"); break; }
                if (ends("ator")) { replace_if_measure("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { replace_if_measure("al"); break; }
                if (ends("iveness")) { replace_if_measure("ive"); break; }
                if (ends("fulness")) { replace_if_measure("ful"); break; }
                if (ends("ousness")) { replace_if_measure("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { replace_if_measure("al"); break; }
                if (ends("iviti")) { replace_if_measure("ive"); break; }
                if (ends("biliti")) { replace_if_measure("ble"); break; }
                break;
            case 'g':
                // reference variant: extra rule
                if (ends("logi")) { replace_if_measure("log"); break; }
                break;
        }
    }

    void step3() {
        switch (b_[k_]) {
            case 'e':
                if (ends("icate")) { replace_if_measure("ic"); break; }
                if (ends("ative")) { replace_if_measure(""); break; }
                if (ends("alize")) { replace_if_measure("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { replace_if_measure("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { replace_if_measure("ic"); break; }
                if (ends("ful")) { replace_if_measure(""); break; }
                break;
            case 's':
                if (ends("ness")) { replace_if_measure(""); break; }
                break;
        }
    }

    void step4() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
            case 'a':
                if (ends("al")) break;
                return;
            case 'c':
                if (ends("ance")) break;
                if (ends("ence")) break;
                return;
            case 'e':
                if (ends("er")) break;
                return;
            case 'i':
                if (ends("ic")) break;
                return;
            case 'l':
                if (ends("able")) break;
                if (ends("ible")) break;
                return;
            case 'n':
                if (ends("ant")) break;
                if (ends("ement")) break;
                if (ends("ment")) break;
                if (ends("ent")) break;
                return;
            case 'o':
                if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) break;
                if (ends("ou")) break;
                return;
            case 's':
                if (ends("ism")) break;
                return;
            case 't':
                if (ends("ate")) break;
                if (ends("iti")) break;
                return;
            case 'u':
                if (ends("ous")) break;
                return;
            case 'v':
                if (ends("ive")) break;
                return;
            case 'z':
                if (ends("ize")) break;
                return;
            default:
                return;
        }
        if (measure() > 1) k_ = j_;
    }

    // drop a final -e and reduce -ll, for m > 1
    void step5() {
        j_ = k_;
        if (b_[k_] == 'e') {
            const int a = measure();
            if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
        }
        if (b_[k_] == 'l' && doublec(k_) && measure() > 1) --k_;
    }
};

}  // namespace

int porter_measure(std::string_view word) {
    if (!all_lower_ascii(word))
        throw UsageError("porter_measure is defined only for lowercase ASCII letter words");
    return PorterBuffer(std::string(word)).measure_whole_word();
}

std::string porter_stem(std::string_view token) {
    if (token.size() <= 2 || !all_lower_ascii(token)) return std::string(token);
    return PorterBuffer(std::string(token)).stem();
}

std::vector<std::string> stem_tokens(std::vector<std::string> tokens) {
    for (auto& t : tokens) t = porter_stem(t);
    return tokens;
}

}  // namespace plagdet
