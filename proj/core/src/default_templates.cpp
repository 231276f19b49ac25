#include "kgdim/lexicalize.hpp"

namespace kgdim {

namespace {

struct Row {
  const char* relation;
  const char* text;
};

// Wording follows the surface forms the relations are usually glossed with.
// ATOMIC events read as a short discourse: the event sentence, then the
// pre-/post-condition clause.
constexpr Row kRows[] = {
    {"/r/FormOf", "{head} is a form of {tail}"},
    {"/r/DerivedFrom", "{head} is derived from {tail}"},
    {"/r/EtymologicallyDerivedFrom",
     "{head} is etymologically derived from {tail}"},
    {"/r/Synonym", "{head} is a synonym of {tail}"},
    {"/r/SimilarTo", "{head} is similar to {tail}"},
    {"/r/DefinedAs", "{head} is defined as {tail}"},
    {"/r/Antonym", "{head} is an antonym of {tail}"},
    {"/r/DistinctFrom", "{head} is distinct from {tail}"},
    {"/r/IsA", "{head} is a {tail}"},
    {"/r/InstanceOf", "{head} is an instance of {tail}"},
    {"/r/MannerOf", "{head} is a manner of {tail}"},
    {"/r/PartOf", "{head} is a part of {tail}"},
    {"/r/HasA", "{head} has {tail}"},
    {"/r/MadeOf", "{head} is made of {tail}"},
    {"/r/AtLocation", "{head} is located at {tail}"},
    {"/r/LocatedNear", "{head} is located near {tail}"},
    {"/r/CreatedBy", "{head} is created by {tail}"},
    {"/r/ReceivesAction", "{head} can be {tail}"},
    {"/r/UsedFor", "{head} is used for {tail}"},
    {"/r/CapableOf", "{head} is capable of {tail}"},
    {"/r/NotCapableOf", "{head} is not capable of {tail}"},
    {"/r/CausesDesire", "{head} causes desire to {tail}"},
    {"/r/MotivatedByGoal", "{head} is motivated by {tail}"},
    {"/r/Desires", "{head} desires {tail}"},
    {"/r/NotDesires", "{head} does not desire {tail}"},
    {"/r/ObstructedBy", "{head} is obstructed by {tail}"},
    {"/r/HasProperty", "{head} has the property {tail}"},
    {"/r/NotHasProperty", "{head} does not have the property {tail}"},
    {"/r/SymbolOf", "{head} is a symbol of {tail}"},
    {"/r/HasFirstSubevent", "{head} has first subevent {tail}"},
    {"/r/HasLastSubevent", "{head} has last subevent {tail}"},
    {"/r/HasSubevent", "{head} has subevent {tail}"},
    {"/r/HasPrerequisite", "{head} has prerequisite {tail}"},
    {"/r/Causes", "{head} causes {tail}"},
    {"/r/Entails", "{head} entails {tail}"},
    {"/r/RelatedTo", "{head} is related to {tail}"},
    {"/r/HasContext", "{head} is used in the context of {tail}"},
    {"/r/EtymologicallyRelatedTo",
     "{head} is etymologically related to {tail}"},
    {"at:xIntent", "{head}. Because PersonX wanted {tail}"},
    {"at:xWant", "{head}. As a result, PersonX wants {tail}"},
    {"at:oWant", "{head}. As a result, others want {tail}"},
    {"at:xNeed", "{head}. Before that, PersonX needed {tail}"},
    {"at:xEffect", "{head}. As a result, {tail}"},
    {"at:oEffect", "{head}. As a result, others {tail}"},
    {"at:xReact", "{head}. As a result, PersonX feels {tail}"},
    {"at:oReact", "{head}. As a result, others feel {tail}"},
    {"at:xAttr", "{head}. PersonX is seen as {tail}"},
    // Source-native relation names.
    {"lemma", "{head} has lemma {tail}"},
    {"synonym", "{head} is a synonym of {tail}"},
    {"Synonym", "{head} is a synonym of {tail}"},
    {"antonym", "{head} is an antonym of {tail}"},
    {"Antonym", "{head} is an antonym of {tail}"},
    {"hypernym", "{head} is a type of {tail}"},
    {"meronym", "{head} has part {tail}"},
    {"holonym", "{head} is part of {tail}"},
    {"lexical_unit", "{head} has lexical unit {tail}"},
    {"reframing_mapping", "{head} reframes {tail}"},
    {"metaphor", "{head} is a metaphor for {tail}"},
    {"excludes", "{head} excludes {tail}"},
    {"perspective_on", "{head} is a perspective on {tail}"},
    {"inheritance", "{head} inherits from {tail}"},
    {"using", "{head} uses {tail}"},
    {"frame_element", "{head} has frame element {tail}"},
    {"subframe", "{head} is a subframe of {tail}"},
    {"precedes", "{head} precedes {tail}"},
    {"inchoative_of", "{head} is inchoative of {tail}"},
    {"causative_of", "{head} is causative of {tail}"},
    {"see_also", "{head} relates to {tail}"},
    {"requires", "{head} requires {tail}"},
    {"label", "{head} is labeled {tail}"},
    {"said to be the same as", "{head} is said to be the same as {tail}"},
    {"different from", "{head} is different from {tail}"},
    {"opposite of", "{head} is the opposite of {tail}"},
    {"subClassOf", "{head} is a subclass of {tail}"},
    {"instanceOf", "{head} is an instance of {tail}"},
    {"description", "{head} is described as {tail}"},
    {"has part", "{head} has part {tail}"},
    {"member of", "{head} is a member of {tail}"},
    {"material used", "{head} is made from {tail}"},
    {"location", "{head} is located in {tail}"},
    {"anatomical location", "{head} is anatomically located in {tail}"},
    {"creator", "{head} is created by {tail}"},
    {"used by", "{head} is used by {tail}"},
    {"use", "{head} is used for {tail}"},
    {"uses", "{head} uses {tail}"},
    {"color", "{head} has color {tail}"},
    {"has quality", "{head} has quality {tail}"},
    {"has cause", "{head} is caused by {tail}"},
    {"has effect", "{head} has effect {tail}"},
    {"field of this occupation", "{head} works in the field of {tail}"},
    {"depicts", "{head} depicts {tail}"},
    {"health specialty", "{head} belongs to the health specialty {tail}"},
};

TemplateTable build_default() {
  TemplateTable table;
  for (const Row& row : kRows) {
    table.add(row.relation, SentenceTemplate::parse(row.text));
  }
  return table;
}

}  // namespace

const TemplateTable& default_templates() {
  static const TemplateTable table = build_default();
  return table;
}

}  // namespace kgdim
