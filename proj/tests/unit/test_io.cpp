#include <doctest.h>

#include "secrefine/io.hpp"
#include "secrefine/types.hpp"
#include "support.hpp"

using namespace secrefine;
using testsupport::TempDir;

TEST_CASE("sha256 matches the published test vector") {
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("atomic write, append and read") {
    TempDir dir("io");
    auto p = dir / "a/b/file.txt";
    io::write_file_atomic(p, "one\n");
    io::append_line(p, "two");
    CHECK(io::read_file(p) == "one\ntwo\n");
    CHECK_THROWS_AS(io::read_file(dir / "missing"), Error);
}

TEST_CASE("split_lines keeps interior empties and drops the trailing newline") {
    auto lines = io::split_lines("a\n\nb\n");
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].empty());
    CHECK(io::split_lines("x\r\ny").size() == 2);
}

TEST_CASE("tree digest depends on names and content only") {
    TempDir a("ta"), b("tb");
    io::write_file_atomic(a / "x/1.txt", "1");
    io::write_file_atomic(a / "2.txt", "2");
    io::write_file_atomic(b / "2.txt", "2");
    io::write_file_atomic(b / "x/1.txt", "1");
    CHECK(io::tree_digest(a.path()) == io::tree_digest(b.path()));
    CHECK(io::list_files(a.path()) == std::vector<std::string>{"2.txt", "x/1.txt"});
    io::write_file_atomic(b / "x/1.txt", "changed");
    CHECK(io::tree_digest(a.path()) != io::tree_digest(b.path()));
}
