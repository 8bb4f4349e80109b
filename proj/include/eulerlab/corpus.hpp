#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerlab/category.hpp"
#include "eulerlab/complex.hpp"

namespace eulerlab {

/// One ambient complex with named objects on it. The text form is documented
/// in docs/corpus_format.md; print(parse(text)) reproduces canonical text
/// byte for byte.
struct CorpusFile {
  struct NamedSet {
    std::string name;
    std::vector<int> members;
    friend bool operator==(const NamedSet&, const NamedSet&) = default;
  };
  struct NamedFn {
    std::string name;
    std::vector<std::pair<int, long>> values;  // simplex id -> value, ascending ids, nonzero
    friend bool operator==(const NamedFn&, const NamedFn&) = default;
  };
  struct Generator {
    std::string set;
    bool algebraic = false;
    friend bool operator==(const Generator&, const Generator&) = default;
  };
  struct NamedFamily {
    std::string name;
    std::vector<Generator> generators;
    friend bool operator==(const NamedFamily&, const NamedFamily&) = default;
  };
  /// A PL map given on the depth-fold barycentric subdivision of the ambient
  /// by the images of all its vertices.
  struct NamedMap {
    std::string name;
    std::string domain;
    std::string target;
    int depth = 0;
    std::vector<QPoint> images;
    friend bool operator==(const NamedMap&, const NamedMap&) = default;
  };
  struct NamedChain {
    std::string name;
    std::string space;
    std::vector<std::string> sets;
    friend bool operator==(const NamedChain&, const NamedChain&) = default;
  };
  struct NamedGerm {
    std::string name;
    std::string set;
    int base = -1;
    friend bool operator==(const NamedGerm&, const NamedGerm&) = default;
  };

  std::string name;
  std::size_t ambient_dim = 0;
  std::vector<QPoint> vertices;
  std::vector<std::vector<int>> simplices;  // canonical order, face-closed
  std::vector<NamedSet> sets;
  std::vector<NamedFn> functions;
  std::vector<NamedFamily> families;
  std::vector<NamedMap> maps;
  std::vector<NamedChain> chains;
  std::vector<NamedGerm> germs;

  friend bool operator==(const CorpusFile&, const CorpusFile&) = default;
};

/// Thrown for malformed corpus text and unresolved names (exit code 1).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string print_corpus(const CorpusFile& c);
/// Parses and validates (face closure, canonical simplex order, references).
CorpusFile parse_corpus(const std::string& text);
CorpusFile read_corpus(const std::string& path);

/// Builds a CorpusFile around a complex (simplices copied in canonical order).
CorpusFile corpus_of(std::string name, const GeomComplex& k);

/// The standard corpus, built deterministically.
std::vector<CorpusFile> standard_corpus();

/// Resolved view of one or more corpus files; names are global.
class Workspace {
 public:
  explicit Workspace(std::vector<CorpusFile> files);

  const std::vector<CorpusFile>& files() const { return files_; }
  ComplexPtr complex_of(std::size_t file) const { return complexes_[file]; }

  /// Throws ParseError if the name is unknown.
  CellSet set(const std::string& name) const;
  std::size_t file_of_set(const std::string& name) const;
  const CorpusFile::NamedMap& map(const std::string& name) const;
  std::size_t file_of_map(const std::string& name) const;
  const CorpusFile::NamedFamily& family(const std::string& name) const;
  std::size_t file_of_family(const std::string& name) const;
  /// The named family as a Family over its file's complex.
  Family family_model(const std::string& name) const;
  const CorpusFile::NamedChain& chain(const std::string& name) const;
  const CorpusFile::NamedFn& function(const std::string& name) const;
  std::size_t file_of_function(const std::string& name) const;
  Germ germ(const std::string& name) const;

  std::vector<std::string> set_names() const;
  std::vector<std::string> map_names() const;
  std::vector<std::string> germ_names() const;

 private:
  std::vector<CorpusFile> files_;
  std::vector<ComplexPtr> complexes_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> sets_, maps_, families_, chains_, fns_, germs_;
};

}  // namespace eulerlab
