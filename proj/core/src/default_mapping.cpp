#include "kgdim/mapping.hpp"

namespace kgdim {

namespace {

struct Row {
  const char* relation;
  Dimension dimension;
  Polarity polarity;
  const char* scope;  // "" = any source
};

constexpr Polarity kPos = Polarity::Positive;
constexpr Polarity kNeg = Polarity::Negated;

// ConceptNet-namespace relations are unscoped: CSKG normalizes WordNet,
// Roget and Visual Genome edges onto the same /r/ identifiers, so the entry
// must resolve regardless of the edge's source tag. ATOMIC relations keep
// their at: namespace. Source-native relation names (WordNet lemma files,
// Roget, FrameNet frame-to-frame, Wikidata-CS properties) are scoped, so
// that they only fire for edges of that source.
//
// AtLocation is listed once, under spatial. NotCapableOf, NotDesires and
// NotHasProperty carry the positive relation's dimension with negated
// polarity. Inverse Wikidata relations (use / used by / uses) share one
// dimension with no direction flag. The comparative dimension has no rows:
// its only source is not part of the supported input set.
constexpr Row kRows[] = {
    // lexical
    {"/r/FormOf", Dimension::Lexical, kPos, ""},
    {"/r/DerivedFrom", Dimension::Lexical, kPos, ""},
    {"/r/EtymologicallyDerivedFrom", Dimension::Lexical, kPos, ""},
    {"lemma", Dimension::Lexical, kPos, "WN"},
    {"lexical_unit", Dimension::Lexical, kPos, "FN"},
    {"label", Dimension::Lexical, kPos, "WD"},
    // similarity
    {"/r/Synonym", Dimension::Similarity, kPos, ""},
    {"/r/SimilarTo", Dimension::Similarity, kPos, ""},
    {"/r/DefinedAs", Dimension::Similarity, kPos, ""},
    {"synonym", Dimension::Similarity, kPos, "WN"},
    {"Synonym", Dimension::Similarity, kPos, "RG"},
    {"reframing_mapping", Dimension::Similarity, kPos, "FN"},
    {"metaphor", Dimension::Similarity, kPos, "FN"},
    {"said to be the same as", Dimension::Similarity, kPos, "WD"},
    // distinctness
    {"/r/Antonym", Dimension::Distinctness, kPos, ""},
    {"/r/DistinctFrom", Dimension::Distinctness, kPos, ""},
    {"antonym", Dimension::Distinctness, kPos, "WN"},
    {"Antonym", Dimension::Distinctness, kPos, "RG"},
    {"excludes", Dimension::Distinctness, kPos, "FN"},
    {"different from", Dimension::Distinctness, kPos, "WD"},
    {"opposite of", Dimension::Distinctness, kPos, "WD"},
    // taxonomic
    {"/r/IsA", Dimension::Taxonomic, kPos, ""},
    {"/r/InstanceOf", Dimension::Taxonomic, kPos, ""},
    {"/r/MannerOf", Dimension::Taxonomic, kPos, ""},
    {"hypernym", Dimension::Taxonomic, kPos, "WN"},
    {"perspective_on", Dimension::Taxonomic, kPos, "FN"},
    {"inheritance", Dimension::Taxonomic, kPos, "FN"},
    {"subClassOf", Dimension::Taxonomic, kPos, "WD"},
    {"instanceOf", Dimension::Taxonomic, kPos, "WD"},
    {"description", Dimension::Taxonomic, kPos, "WD"},
    // part-whole
    {"/r/PartOf", Dimension::PartWhole, kPos, ""},
    {"/r/HasA", Dimension::PartWhole, kPos, ""},
    {"/r/MadeOf", Dimension::PartWhole, kPos, ""},
    {"meronym", Dimension::PartWhole, kPos, "WN"},
    {"holonym", Dimension::PartWhole, kPos, "WN"},
    {"has part", Dimension::PartWhole, kPos, "WD"},
    {"member of", Dimension::PartWhole, kPos, "WD"},
    {"material used", Dimension::PartWhole, kPos, "WD"},
    // spatial
    {"/r/AtLocation", Dimension::Spatial, kPos, ""},
    {"/r/LocatedNear", Dimension::Spatial, kPos, ""},
    {"location", Dimension::Spatial, kPos, "WD"},
    {"anatomical location", Dimension::Spatial, kPos, "WD"},
    // creation
    {"/r/CreatedBy", Dimension::Creation, kPos, ""},
    {"creator", Dimension::Creation, kPos, "WD"},
    // utility
    {"/r/ReceivesAction", Dimension::Utility, kPos, ""},
    {"/r/UsedFor", Dimension::Utility, kPos, ""},
    {"/r/CapableOf", Dimension::Utility, kPos, ""},
    {"/r/NotCapableOf", Dimension::Utility, kNeg, ""},
    {"using", Dimension::Utility, kPos, "FN"},
    {"used by", Dimension::Utility, kPos, "WD"},
    {"use", Dimension::Utility, kPos, "WD"},
    {"uses", Dimension::Utility, kPos, "WD"},
    // desire-goal
    {"at:xIntent", Dimension::DesireGoal, kPos, ""},
    {"at:xWant", Dimension::DesireGoal, kPos, ""},
    {"at:oWant", Dimension::DesireGoal, kPos, ""},
    {"/r/CausesDesire", Dimension::DesireGoal, kPos, ""},
    {"/r/MotivatedByGoal", Dimension::DesireGoal, kPos, ""},
    {"/r/Desires", Dimension::DesireGoal, kPos, ""},
    {"/r/NotDesires", Dimension::DesireGoal, kNeg, ""},
    {"/r/ObstructedBy", Dimension::DesireGoal, kPos, ""},
    // quality
    {"at:xAttr", Dimension::Quality, kPos, ""},
    {"/r/HasProperty", Dimension::Quality, kPos, ""},
    {"/r/NotHasProperty", Dimension::Quality, kNeg, ""},
    {"/r/SymbolOf", Dimension::Quality, kPos, ""},
    {"frame_element", Dimension::Quality, kPos, "FN"},
    {"color", Dimension::Quality, kPos, "WD"},
    {"has quality", Dimension::Quality, kPos, "WD"},
    // temporal
    {"at:xNeed", Dimension::Temporal, kPos, ""},
    {"at:xEffect", Dimension::Temporal, kPos, ""},
    {"at:oEffect", Dimension::Temporal, kPos, ""},
    {"at:xReact", Dimension::Temporal, kPos, ""},
    {"at:oReact", Dimension::Temporal, kPos, ""},
    {"/r/HasFirstSubevent", Dimension::Temporal, kPos, ""},
    {"/r/HasLastSubevent", Dimension::Temporal, kPos, ""},
    {"/r/HasSubevent", Dimension::Temporal, kPos, ""},
    {"/r/HasPrerequisite", Dimension::Temporal, kPos, ""},
    {"/r/Causes", Dimension::Temporal, kPos, ""},
    {"/r/Entails", Dimension::Temporal, kPos, ""},
    {"subframe", Dimension::Temporal, kPos, "FN"},
    {"precedes", Dimension::Temporal, kPos, "FN"},
    {"inchoative_of", Dimension::Temporal, kPos, "FN"},
    {"causative_of", Dimension::Temporal, kPos, "FN"},
    {"has cause", Dimension::Temporal, kPos, "WD"},
    {"has effect", Dimension::Temporal, kPos, "WD"},
    // relational-other
    {"/r/RelatedTo", Dimension::RelationalOther, kPos, ""},
    {"/r/HasContext", Dimension::RelationalOther, kPos, ""},
    {"/r/EtymologicallyRelatedTo", Dimension::RelationalOther, kPos, ""},
    {"see_also", Dimension::RelationalOther, kPos, "FN"},
    {"requires", Dimension::RelationalOther, kPos, "FN"},
    {"field of this occupation", Dimension::RelationalOther, kPos, "WD"},
    {"depicts", Dimension::RelationalOther, kPos, "WD"},
    {"health specialty", Dimension::RelationalOther, kPos, "WD"},
};

MappingTable build_default() {
  MappingTable table;
  for (const Row& row : kRows) {
    table.add({row.relation, row.dimension, row.polarity, row.scope});
  }
  table.add_excluded_prefix("/r/dbpedia");
  return table;
}

}  // namespace

const MappingTable& default_mapping() {
  static const MappingTable table = build_default();
  return table;
}

}  // namespace kgdim
