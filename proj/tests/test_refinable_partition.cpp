#include "homodec/refinable_partition.hpp"

#include <doctest.h>

using namespace homodec;

namespace {

std::vector<std::vector<Element>> snapshot(const RefinablePartition &p) {
    std::vector<std::vector<Element>> out;
    for (const ElementSet &cls : p.to_sets())
        out.push_back(cls.members());
    return out;
}

} // namespace

TEST_CASE("refinable_partition: a proper overlap splits, intersection first") {
    RefinablePartition p(4, {ElementSet::full(4)});
    std::vector<int> created = p.refine_by_set(ElementSet(4, {1, 2}));
    CHECK(created.size() == 1);
    CHECK(snapshot(p) == std::vector<std::vector<Element>>{{1, 2}, {0, 3}});
    CHECK(p.class_of(1) == p.class_of(2));
    CHECK(p.class_of(0) != p.class_of(1));
}

TEST_CASE("refinable_partition: refining by a whole class is a no-op") {
    RefinablePartition p(4, {ElementSet(4, {0, 1}), ElementSet(4, {2, 3})});
    CHECK(p.refine_by_set(ElementSet(4, {0, 1})).empty());
    CHECK(snapshot(p) == std::vector<std::vector<Element>>{{0, 1}, {2, 3}});
}

TEST_CASE("refinable_partition: one refining set can split several classes") {
    RefinablePartition p(4, {ElementSet(4, {0, 1}), ElementSet(4, {2, 3})});
    std::vector<int> created = p.refine_by_set(ElementSet(4, {1, 2}));
    CHECK(created.size() == 2);
    CHECK(snapshot(p) == std::vector<std::vector<Element>>{{1}, {0}, {2}, {3}});
    CHECK(p.class_count() == 4);
    CHECK(p.element_count() == 4);
}

TEST_CASE("refinable_partition: refining elements outside the working subset are ignored") {
    RefinablePartition p(6, {ElementSet(6, {0, 1}), ElementSet(6, {2, 3})});
    CHECK_FALSE(p.contains(4));
    std::vector<int> created = p.refine_by_set(std::vector<Element>{4, 5, 0});
    CHECK(created.size() == 1);
    CHECK(snapshot(p) == std::vector<std::vector<Element>>{{0}, {1}, {2, 3}});
}

TEST_CASE("refinable_partition: groups advance only on demand") {
    RefinablePartition p(4, {ElementSet(4, {0, 1}), ElementSet(4, {2, 3})});
    int a = p.class_of(0), b = p.class_of(2);
    // both initial classes share the single starting group
    CHECK(p.group_of_class(a) == p.group_of_class(b));

    p.refine_by_set(ElementSet(4, {1, 2}));
    // splits inherit the group of their origin
    CHECK(p.group_of_class(p.class_of(1)) == p.group_of_class(p.class_of(0)));
    CHECK(p.group_of_class(p.class_of(0)) == p.group_of_class(p.class_of(3)));

    p.advance_groups();
    std::vector<int> classes = p.classes();
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            CHECK(p.group_of_class(classes[i]) != p.group_of_class(classes[j]));
}

TEST_CASE("refinable_partition: class order is stable and queries are consistent") {
    RefinablePartition p(5, {ElementSet(5, {3, 4}), ElementSet(5, {0, 2})});
    CHECK(p.universe() == 5);
    CHECK(p.element_count() == 4);
    CHECK(snapshot(p) == std::vector<std::vector<Element>>{{3, 4}, {0, 2}});

    p.refine_by_set(ElementSet(5, {2, 4}));
    CHECK(snapshot(p) == std::vector<std::vector<Element>>{{4}, {3}, {2}, {0}});
    for (int cls : p.classes()) {
        CHECK(p.class_size(cls) == 1);
        for (Element v : p.members(cls))
            CHECK(p.class_of(v) == cls);
    }
}

TEST_CASE("refinable_partition: the operation counter grows with work done") {
    RefinablePartition p(8, {ElementSet::full(8)});
    long before = p.ops();
    p.refine_by_set(ElementSet(8, {0, 1, 2}));
    CHECK(p.ops() >= before + 3);
    p.count_ops(10);
    CHECK(p.ops() >= before + 13);
}
