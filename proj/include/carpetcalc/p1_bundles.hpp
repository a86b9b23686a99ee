#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "carpetcalc/numbers.hpp"

namespace carpetcalc {

/// Direct sum of line bundles O(d_1) + ... + O(d_r) on the projective line.
///
/// Stored as a multiset of degrees, sorted in descending order so that two
/// bundles compare equal exactly when they are isomorphic. The empty multiset
/// is the zero sheaf.
class SplitBundle
{
public:
	SplitBundle() = default;
	SplitBundle(std::initializer_list<Integer> degrees);
	explicit SplitBundle(std::vector<Integer> degrees);

	const std::vector<Integer> &degrees() const { return degrees_; }
	std::size_t rank() const { return degrees_.size(); }
	bool empty() const { return degrees_.empty(); }

	/// Sum of the degrees, i.e. the degree of the determinant.
	Integer degree() const;

	/// Tensor with O(t).
	SplitBundle twisted(const Integer &t) const;

	std::string str() const;

	friend SplitBundle operator+(const SplitBundle &lhs, const SplitBundle &rhs);
	friend bool operator==(const SplitBundle &, const SplitBundle &) = default;

private:
	void normalize();

	std::vector<Integer> degrees_;
};

Integer h0(const SplitBundle &bundle);
Integer h1(const SplitBundle &bundle);
Integer euler_char(const SplitBundle &bundle);

/// E -> E^* (x) O(-2), so that H^i(dual) = H^{1-i}(E)^*.
SplitBundle serre_dual(const SplitBundle &bundle);

} // namespace carpetcalc
