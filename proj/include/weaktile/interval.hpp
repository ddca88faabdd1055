#pragma once

#include "weaktile/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace weaktile {

// Open bounded interval (left, right) with left < right.
class Interval {
  public:
    Interval(Rational left, Rational right) : left_(std::move(left)), right_(std::move(right))
    {
        if (!(left_ < right_)) {
            throw std::invalid_argument("interval requires left < right, got (" + left_.str() + ", " +
                                        right_.str() + ")");
        }
    }

    const Rational& left() const { return left_; }
    const Rational& right() const { return right_; }
    Rational length() const { return right_ - left_; }

    bool contains_open(const Rational& x) const { return left_ < x && x < right_; }
    bool contains(const Interval& o) const { return left_ <= o.left_ && o.right_ <= right_; }
    bool intersects(const Interval& o) const { return left_ < o.right_ && o.left_ < right_; }

    Interval translated(const Rational& s) const { return {left_ + s, right_ + s}; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval& a, const Interval& b)
    {
        if (auto c = a.left_ <=> b.left_; c != 0) {
            return c;
        }
        return a.right_ <=> b.right_;
    }

  private:
    Rational left_;
    Rational right_;
};

// The finite region on which an almost-everywhere identity is checked.
class Window {
  public:
    Window(Rational left, Rational right) : left_(std::move(left)), right_(std::move(right))
    {
        if (!(left_ < right_)) {
            throw std::invalid_argument("window requires left < right");
        }
    }
    const Rational& left() const { return left_; }
    const Rational& right() const { return right_; }

    friend bool operator==(const Window&, const Window&) = default;

  private:
    Rational left_;
    Rational right_;
};

// Finite union of open intervals, kept sorted with gaps of positive length.
class IntervalUnion {
  public:
    // Sorts, then merges overlapping or touching intervals.
    static IntervalUnion normalize(std::vector<Interval> intervals)
    {
        if (intervals.empty()) {
            throw std::invalid_argument("interval union needs at least one interval");
        }
        std::sort(intervals.begin(), intervals.end());
        std::vector<Interval> merged;
        merged.reserve(intervals.size());
        for (auto& iv : intervals) {
            if (!merged.empty() && iv.left() <= merged.back().right()) {
                if (merged.back().right() < iv.right()) {
                    merged.back() = Interval(merged.back().left(), iv.right());
                }
                continue;
            }
            merged.push_back(std::move(iv));
        }
        return IntervalUnion(std::move(merged));
    }

    const std::vector<Interval>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    const Interval& operator[](std::size_t i) const { return components_[i]; }

    const Rational& left() const { return components_.front().left(); }
    const Rational& right() const { return components_.back().right(); }
    Rational diameter() const { return right() - left(); }

    Rational measure() const
    {
        Rational total;
        for (const auto& c : components_) {
            total += c.length();
        }
        return total;
    }

    std::vector<Rational> lengths() const
    {
        std::vector<Rational> out;
        out.reserve(components_.size());
        for (const auto& c : components_) {
            out.push_back(c.length());
        }
        return out;
    }

    // Gap k is (right of component k, left of component k+1).
    std::vector<Interval> gaps() const
    {
        std::vector<Interval> out;
        for (std::size_t k = 0; k + 1 < components_.size(); ++k) {
            out.emplace_back(components_[k].right(), components_[k + 1].left());
        }
        return out;
    }

    IntervalUnion translated(const Rational& s) const
    {
        std::vector<Interval> out;
        out.reserve(components_.size());
        for (const auto& c : components_) {
            out.push_back(c.translated(s));
        }
        return IntervalUnion(std::move(out));
    }

    IntervalUnion reflected() const
    {
        std::vector<Interval> out;
        for (auto it = components_.rbegin(); it != components_.rend(); ++it) {
            out.emplace_back(-it->right(), -it->left());
        }
        return IntervalUnion(std::move(out));
    }

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

  private:
    explicit IntervalUnion(std::vector<Interval> c) : components_(std::move(c)) {}
    std::vector<Interval> components_;
};

inline IntervalUnion normalize_union(std::vector<Interval> intervals)
{
    return IntervalUnion::normalize(std::move(intervals));
}

}  // namespace weaktile
